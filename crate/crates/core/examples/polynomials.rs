//! The polynomial engine on its own: Groebner bases, colons, Hilbert series.

use quadcone::poly::{Ideal, MonomialOrder, Polynomial};

fn main() -> quadcone::Result<()> {
    // twisted cubic
    let i = Ideal::parse("x1*x3 - x2^2, x2*x4 - x3^2, x1*x4 - x2*x3", Some(4))?;
    for o in [MonomialOrder::grevlex(4), MonomialOrder::lex(4)] {
        println!("basis under {o:?}:");
        for g in i.basis(&o).iter() {
            println!("  {g}");
        }
    }
    let colon = i.colon(&Polynomial::var(0));
    println!("I : x1 == I? {}", colon.same_ideal(&i));
    println!(
        "Hilbert function {:?}",
        quadcone::koszul::hilbert_function(&i, 8)
    );
    Ok(())
}
