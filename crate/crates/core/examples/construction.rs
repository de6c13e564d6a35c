//! Quadratic non-CM semigroups in every embedding dimension, and gluing.

use quadcone::classify::{construct_general, glue_quadratic, is_ci, ConstructionParams};
use quadcone::tangent_cone::TangentConeAnalysis;

fn main() -> quadcone::Result<()> {
    for u in [vec![3, 3, 1], vec![3, 1, 1, 1], vec![5, 3, 1, 3, 1]] {
        let c = construct_general(&ConstructionParams::new(u.len(), u)?)?;
        let a = TangentConeAnalysis::compute(&c.semigroup)?;
        println!(
            "u = {:?}: {} quadratic={} cm={}",
            c.params.u, c.semigroup, a.is_quadratic, a.is_cm
        );
        for f in c.sorted_relations() {
            println!("  {f}");
        }
        let prefixes: Vec<String> = c
            .prefixes()
            .iter()
            .map(|p| format!("{p} ci={}", is_ci(p)))
            .collect();
        println!("  prefixes: {}", prefixes.join(", "));
    }

    let l = quadcone::NumericalSemigroup::from_minimal(&[8, 12, 13, 18, 35])?;
    let g = glue_quadratic(&l, 25)?;
    let a = TangentConeAnalysis::compute(&g)?;
    println!(
        "glue with 25 = 12 + 13: {g} quadratic={} cm={}",
        a.is_quadratic, a.is_cm
    );
    Ok(())
}
