//! Toric ideal, tangent cone and CM test for <8,12,13,18,35>.

use quadcone::poly::Polynomial;
use quadcone::tangent_cone::{initial_forms_by_saturation, initial_forms_ideal, toric_ideal};
use quadcone::NumericalSemigroup;

fn main() -> quadcone::Result<()> {
    let h = NumericalSemigroup::from_minimal(&[8, 12, 13, 18, 35])?;
    let toric = toric_ideal(&h);
    println!("I_H ({} generators)", toric.gens().len());
    for g in toric.gens() {
        println!("  {g}");
    }

    let istar = initial_forms_ideal(&toric);
    println!("I* ({} generators)", istar.gens().len());
    for g in istar.gens() {
        println!("  {g}");
    }
    assert!(istar.same_ideal(&initial_forms_by_saturation(&toric)));

    // I* : x5 is the maximal ideal, so x1 is a zero divisor and gr is not CM
    let colon = istar.colon(&Polynomial::var(4));
    println!("I* : x5 = {colon}");
    println!(
        "I* : x1 == I*? {}",
        istar.colon(&Polynomial::var(0)).same_ideal(&istar)
    );
    println!("h-vector {:?}", h.h_vector_arithmetic());
    Ok(())
}
