//! The two families of quadratic non-CM semigroups of embedding dimension 5.

use quadcone::classify::{classify_non_cm_quadratic_5, family_member, FamilyKind, FamilyParams};
use quadcone::tangent_cone::TangentConeAnalysis;

fn main() -> quadcone::Result<()> {
    for kind in [FamilyKind::I, FamilyKind::II] {
        for (u, up, upp) in [(1, 3, 1), (2, 5, 3)] {
            let p = FamilyParams::new(kind, u, up, upp)?;
            let h = family_member(&p)?;
            let a = TangentConeAnalysis::compute(&h)?;
            println!(
                "{p}: {h} quadratic={} cm={} h={:?} qgb={}",
                a.is_quadratic,
                a.is_cm,
                a.h_vector,
                a.qgb_revlex.map_or("none".into(), |q| q.order)
            );
            assert_eq!(classify_non_cm_quadratic_5(&h), Some(p));
        }
    }
    // quadratic and non-CM, but outside the positive-parameter families
    let h = quadcone::NumericalSemigroup::from_minimal(&[8, 10, 11, 12, 25])?;
    let a = TangentConeAnalysis::compute(&h)?;
    println!(
        "{h}: quadratic={} cm={} family={:?}",
        a.is_quadratic,
        a.is_cm,
        classify_non_cm_quadratic_5(&h)
    );
    Ok(())
}
