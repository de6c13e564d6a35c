//! Arithmetic Cohen-Macaulay test with an explicit violating factorization.

use quadcone::NumericalSemigroup;

fn main() -> quadcone::Result<()> {
    for gens in [
        [8u64, 12, 13, 18, 35].as_slice(),
        &[16, 17, 18, 20, 24],
        &[4, 5, 11],
    ] {
        let h = NumericalSemigroup::from_minimal(gens)?;
        let c: Vec<u64> = (1..=h.embdim()).map(|i| h.c_value(i)).collect();
        let cert = h.is_cm_tangent_cone();
        println!("{h}: c = {c:?}, {cert}");
        if let (Some(nu), Some(v)) = (&cert.witness, cert.witness_value) {
            let len: u32 = nu.iter().sum();
            println!(
                "  nu = {nu:?}, value {v}: |nu| = {len} > 1 + ord({}) = {}",
                v - h.multiplicity(),
                1 + h.order(v - h.multiplicity())?
            );
            for f in h.factorizations(v) {
                println!("  {v} = {:?}", f.coefficients);
            }
            assert!(h.verify_cm_witness(nu));
        }
    }
    Ok(())
}
