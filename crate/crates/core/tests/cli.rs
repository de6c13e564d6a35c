use quadcone::cli::run;
use quadcone::search::{analyze_all, read_records, ClassificationRecord, SweepSpec};

fn call(args: &[&str]) -> (i32, String) {
    run(std::iter::once("quadcone").chain(args.iter().copied()))
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("quadcone-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn toric_and_tangent_cone_of_the_golden_example() {
    let (code, out) = call(&["toric", "8,12,13,18,35"]);
    assert_eq!(code, 0);
    assert!(out.contains("8 generators"));
    for b in ["x3^2 - x1*x4", "x2*x3*x4 - x1*x5", "x1^2*x4^3 - x5^2"] {
        assert!(out.contains(b), "{out}");
    }
    let (_, out) = call(&["tangent-cone", "8,12,13,18,35"]);
    assert!(out.contains("x3^2 - x1*x4") && out.contains("Cohen-Macaulay: false"));
}

#[test]
fn json_is_the_persisted_record() {
    for sub in ["analyze", "cm", "hvector", "classify"] {
        let (code, out) = call(&[sub, "8,12,13,18,35", "--json"]);
        assert_eq!(code, 0, "{sub}");
        let r: ClassificationRecord = serde_json::from_str(&out).unwrap();
        assert_eq!(r.h_vector, vec![1, 4, 2, 1]);
        assert!(!r.is_cm);
    }
}

#[test]
fn classify_examples() {
    assert_eq!(call(&["classify", "5,6,7,8,9"]).1, "none\n");
    let (_, out) = call(&["classify", "8,10,12,15,29"]);
    assert!(out.starts_with("family II"), "{out}");
    let (code, out) = call(&["classify", "--grid", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("counterexamples: 0"), "{out}");
    assert_eq!(call(&["classify"]).0, 1);
}

#[test]
fn construct_errors() {
    let (code, out) = call(&["construct", "--n", "3", "--u", "2,3,1"]);
    assert_eq!(code, 1);
    assert!(out.contains("InvalidParams"));
    let (code, out) = call(&["construct", "--n", "3"]);
    assert_eq!(code, 2);
    assert!(out.contains("--u"), "{out}");
}

#[test]
fn koszul_on_an_ideal_file() {
    let path = tmp("j3.txt");
    std::fs::write(
        &path,
        "# J3\nx2^2, x5^2, x3^2 - x2*x4, x4^2, x2*x3, x3*x4, x3*x5\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let (code, out) = call(&[
        "koszul",
        "--ideal",
        p,
        "--family",
        "0;(x5);(x3,x5);(x2,x5);(x2,x4,x5);(x2,x3,x5);m",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("h-polynomial: 1,4,3"));
    assert!(out.contains("Koszul filtration: true"));
    assert!(out.contains("identity=0:(x5)=(x3,x5)"));
    assert!(out.contains("no quadratic GB for any term order: true"));
    let (code, out) = call(&["koszul", "--ideal", "/nonexistent/ideal.txt"]);
    assert_eq!(code, 1);
    assert!(out.contains("Io"));
}

#[test]
fn search_persists_and_resumes() {
    let path = tmp("sweep.jsonl");
    let _ = std::fs::remove_file(&path);
    let p = path.to_str().unwrap();
    let args = [
        "search",
        "--embdim",
        "4",
        "--max-mult",
        "6",
        "--bound",
        "20",
        "--out",
        p,
        "--jobs",
        "2",
    ];
    let (code, first) = call(&args);
    assert_eq!(code, 0, "{first}");
    let (_, second) = call(&args);
    assert!(second.contains("written=0"), "{second}");
    let records = read_records(&path).unwrap();
    assert!(!records.is_empty());
    let (code, report) = call(&["table1", "--in", p]);
    assert_eq!(code, 0);
    assert!(report.contains("distinct h-vectors: 0"), "{report}");
}

#[test]
fn sweeps_are_deterministic() {
    let spec = SweepSpec::new(4, (4, 6), 22);
    let strip = |mut v: Vec<ClassificationRecord>| {
        for r in &mut v {
            r.timestamp = 0;
        }
        v
    };
    let a = strip(analyze_all(&spec.clone().with_jobs(1)).unwrap());
    let b = strip(analyze_all(&spec.with_jobs(3)).unwrap());
    assert_eq!(a, b);
}

#[test]
fn semigroup_arithmetic_from_analyze() {
    let (code, out) = call(&["analyze", "8,12,13,18,20,35", "--element", "43"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("semigroup: <8,12,13,18,35>"));
    assert!(out.contains("Frobenius number: 27"));
    assert!(out.contains("Apéry set w.r.t. 8: 0,12,13,18,25,30,31,35"));
    assert!(out.contains("Hilbert function: 1,5,7,8,..."));
    assert!(out.contains("factorizations (0,1,1,1,0) (1,0,0,0,1)"));
    let (_, out) = call(&["analyze", "2,7", "--element", "14"]);
    assert!(out.contains("order 7, factorizations (0,2) (7,0)"));
    assert!(out.contains("complete intersection: true"));
}

#[test]
fn polynomial_engine_from_ideal() {
    let (code, _) = call(&["ideal", "x1", "--spoly", "x1"]);
    assert_eq!(code, 1, "--spoly needs two polynomials");
    let (_, out) = call(&[
        "ideal",
        "x1",
        "--nvars",
        "5",
        "--priority",
        "1,2,4,5,3",
        "--spoly",
        "x3^2 - x2*x4; x2*x3",
    ]);
    assert_eq!(out, "S-polynomial: x3^3\n");
    let (_, out) = call(&["ideal", "x2 - x1^2, x3 - x1^3", "--eliminate", "1"]);
    assert_eq!(out, "x2^3 - x3^2\n");
    let (_, out) = call(&["ideal", "x1^2, x1*x2, x2^2", "--hilbert"]);
    assert!(out.contains("numerator over (1-t)^2: 1,0,-3,2"));
    let (code, out) = call(&["ideal", "x1", "--priority", "1,1"]);
    assert_eq!(code, 1, "{out}");
}

#[test]
fn h_vector_negativity() {
    assert_eq!(
        call(&["koszul", "--hvector", "1,4,5"]).1.lines().next(),
        Some("1/h(-t): coefficient -29 at t^6")
    );
    assert_eq!(call(&["koszul"]).0, 2);
}
