//! h-vectors of quadratic tangent cones for the reference semigroups.

use quadcone::search::{reference_records, table1_report, KNOWN_H_VECTORS};

fn main() -> quadcone::Result<()> {
    let records = reference_records(30)?;
    for r in &records {
        println!(
            "{:<22} h={:?} cm={} qgb={} {}",
            r.key,
            r.h_vector,
            r.is_cm,
            r.qgb_order.as_deref().unwrap_or("none"),
            r.koszul_verdict
        );
    }
    println!("\n{}", table1_report(&records));
    println!("known h-vectors: {}", KNOWN_H_VECTORS.len());
    Ok(())
}
