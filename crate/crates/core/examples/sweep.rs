//! A small resumable sweep persisted as JSONL, summarized by h-vector.

use quadcone::search::{analyze_and_persist, read_records, table1_report, SweepSpec};

fn main() -> quadcone::Result<()> {
    let path = std::env::temp_dir().join("quadcone-sweep-example.jsonl");
    let spec = SweepSpec::new(5, (8, 9), 40).necessary_only();
    let first = analyze_and_persist(&spec, &path)?;
    let again = analyze_and_persist(&spec, &path)?;
    println!("first run: {first}\nsecond run: {again}");

    let records = read_records(&path)?;
    for r in records.iter().filter(|r| r.is_quadratic && !r.is_cm) {
        println!(
            "{} h={:?} family={}",
            r.key,
            r.h_vector,
            r.family_match.map_or("none".into(), |p| p.to_string())
        );
    }
    println!("\n{}", table1_report(&records));
    Ok(())
}
