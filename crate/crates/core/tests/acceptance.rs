//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

use quadcone::classify::{
    classify_non_cm_quadratic_5, construct_general, family_member, is_ci, ConstructionParams,
    FamilyKind, FamilyParams,
};
use quadcone::koszul::{
    grobner_flag_search, growth_bound_check, linear_colon, parse_var_ideal, poincare_negativity,
    quadratic_gb_nonexistence, verify_koszul_filtration, FiltrationFamily, HPolynomial,
};
use quadcone::poly::{Ideal, Polynomial};
use quadcone::search::{
    analyze, enumerate_semigroups, ClassificationRecord, SweepSpec, REFERENCE_EXAMPLES,
};
use quadcone::tangent_cone::{
    initial_forms_by_saturation, initial_forms_ideal, is_cm_ideal, toric_ideal, TangentConeAnalysis,
};
use quadcone::NumericalSemigroup;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn h(g: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::from_minimal(g).unwrap()
}

fn ideal(text: &str, n: usize) -> Ideal {
    Ideal::parse(text, Some(n)).unwrap()
}

fn maximal(n: usize) -> Ideal {
    Ideal::variables(&(0..n).collect::<Vec<_>>(), n)
}

fn golden() -> Outcome {
    let start = Instant::now();
    let g = h(&[8, 12, 13, 18, 35]);
    let toric = toric_ideal(&g);
    let published = ideal(
        "x3^2 - x1*x4, x2*x4^2 - x3*x5, x2*x3*x4 - x1*x5, x2^3 - x4^2, \
         x1^3 - x2^2, x1^2*x3*x4 - x2*x5, x1^2*x4^3 - x5^2, x1^2*x2^2*x3 - x4*x5",
        5,
    );
    check(toric.gens().len() == 8, || {
        format!("{} toric generators", toric.gens().len())
    })?;
    let monic = |i: &Ideal| -> BTreeSet<String> {
        i.gens()
            .iter()
            .map(|p| p.clone().monic().to_string())
            .collect()
    };
    check(monic(&toric) == monic(&published), || {
        format!("I_H = {toric}")
    })?;
    let istar = initial_forms_ideal(&toric);
    let want_istar = ideal(
        "x5^2, x4*x5, x3*x5, x2*x5, x1*x5, x4^2, x3^2 - x1*x4, x2^2",
        5,
    );
    check(istar.gens().len() == 8, || {
        format!("I* has {} generators", istar.gens().len())
    })?;
    check(istar.same_ideal(&want_istar), || format!("I* = {istar}"))?;
    for g in want_istar.gens() {
        check(
            istar
                .gens()
                .iter()
                .any(|p| p.clone().monic() == g.clone().monic()),
            || format!("{g} is not a minimal generator of I*"),
        )?;
    }
    check(
        initial_forms_by_saturation(&toric).same_ideal(&istar),
        || "saturation route disagrees".into(),
    )?;
    let colon = istar.colon(&Polynomial::var(4));
    check(colon.same_ideal(&maximal(5)), || format!("I*:x5 = {colon}"))?;
    let secs = start.elapsed().as_secs_f64();
    check(secs < 10.0, || format!("took {secs:.1}s"))?;
    Ok(format!(
        "8 binomials and 8 initial forms as published, I*:x5 = m, {secs:.2}s"
    ))
}

fn table1() -> Outcome {
    let start = Instant::now();
    for (g, hv, cm, qgb) in REFERENCE_EXAMPLES {
        let s = h(g);
        let a = TangentConeAnalysis::compute(&s).map_err(|e| e.to_string())?;
        check(s.multiplicity() == g[0], || format!("{s}: multiplicity"))?;
        check(a.is_quadratic, || format!("{s}: not quadratic"))?;
        check(a.h_vector == hv.to_vec(), || {
            format!("{s}: h-vector {:?}", a.h_vector)
        })?;
        check(a.is_cm == *cm, || format!("{s}: CM = {}", a.is_cm))?;
        check(a.qgb_revlex.is_some() == *qgb, || {
            format!("{s}: revlex qGB {:?}", a.qgb_revlex)
        })?;
        check(s.h_vector_arithmetic() == hv.to_vec(), || {
            format!("{s}: arithmetic h-vector")
        })?;
    }
    let secs = start.elapsed().as_secs_f64();
    check(secs < 300.0, || format!("took {secs:.1}s"))?;
    Ok(format!(
        "{} listed semigroups match (the (1,4,5) row lists no semigroup), {secs:.2}s",
        REFERENCE_EXAMPLES.len()
    ))
}

struct Sweep {
    records: Vec<ClassificationRecord>,
    candidates: usize,
    errors: Vec<String>,
}

fn sweep(spec: &SweepSpec) -> Sweep {
    let cands: Vec<NumericalSemigroup> = enumerate_semigroups(spec)
        .into_iter()
        .filter(|s| !spec.require_necessary || s.quadratic_necessary())
        .collect();
    let results: Vec<Result<ClassificationRecord, String>> = cands
        .par_iter()
        .map(|s| analyze(s, spec.truncation).map_err(|e| format!("{s}: {e}")))
        .collect();
    let mut records = Vec::new();
    let mut errors = Vec::new();
    for r in results {
        match r {
            Ok(r) => records.push(r),
            Err(e) => errors.push(e),
        }
    }
    Sweep {
        records,
        candidates: cands.len(),
        errors,
    }
}

fn dual_oracle(s: &Sweep) -> Outcome {
    check(s.errors.is_empty(), || {
        format!("{} errors, first: {}", s.errors.len(), s.errors[0])
    })?;
    let mut mismatches = Vec::new();
    for r in &s.records {
        let sg = h(&r.generators);
        if r.h_vector != sg.h_vector_arithmetic() {
            mismatches.push(format!("{}: h-vector", r.key));
        }
        if r.is_cm != sg.is_cm_tangent_cone().is_cm() || r.is_cm != r.cm_witness.is_none() {
            mismatches.push(format!("{}: CM", r.key));
        }
        if r.h_vector.iter().sum::<i64>() != r.multiplicity as i64 {
            mismatches.push(format!("{}: sum of h-vector", r.key));
        }
    }
    // the saturation route to I* on every quadratic record
    let quad: Vec<&ClassificationRecord> = s.records.iter().filter(|r| r.is_quadratic).collect();
    let sat: Vec<String> = quad
        .par_iter()
        .filter_map(|r| {
            let t = toric_ideal(&h(&r.generators));
            let mora = initial_forms_ideal(&t);
            let ok =
                initial_forms_by_saturation(&t).same_ideal(&mora) && is_cm_ideal(&mora) == r.is_cm;
            (!ok).then(|| format!("{}: I* routes", r.key))
        })
        .collect();
    mismatches.extend(sat);
    check(mismatches.is_empty(), || format!("{mismatches:?}"))?;
    Ok(format!(
        "{} candidates, {} quadratic (I* cross-checked by saturation), 0 mismatches",
        s.candidates,
        quad.len()
    ))
}

fn classification(s: &Sweep) -> Outcome {
    let mut bad = Vec::new();
    let mut non_cm = 0;
    for r in &s.records {
        let special = r.is_quadratic && !r.is_cm;
        non_cm += usize::from(special);
        if special != r.family_match.is_some() {
            let why = outside_positive_grid(&r.generators)
                .map(|p| {
                    format!(
                        "matches {:?} with (u,u',u'') = ({},{},0)",
                        p.kind, p.u, p.u_prime
                    )
                })
                .unwrap_or_else(|| format!("family {:?}", r.family_match));
            bad.push(format!("<{}> {why}", r.key));
        }
    }
    let grid: Vec<FamilyParams> = [FamilyKind::I, FamilyKind::II]
        .into_iter()
        .flat_map(|k| {
            (1..=9u64).flat_map(move |u| {
                (3..=9u64).step_by(2).flat_map(move |up| {
                    (1..=9u64).map(move |upp| FamilyParams::new(k, u, up, upp).unwrap())
                })
            })
        })
        .collect();
    let results: Vec<Option<String>> = grid
        .par_iter()
        .map(|p| {
            let m = match family_member(p) {
                Ok(m) if m.embdim() == 5 => m,
                _ => return None,
            };
            let a = match TangentConeAnalysis::compute(&m) {
                Ok(a) => a,
                Err(e) => return Some(format!("{p}: {e}")),
            };
            let back = classify_non_cm_quadratic_5(&m)
                .and_then(|q| family_member(&q).ok())
                .map(|q| q.generators().to_vec());
            let ok = a.is_quadratic
                && !a.is_cm
                && a.qgb_revlex.is_some()
                && back.as_deref() == Some(m.generators());
            (!ok).then(|| format!("{p}: {m}"))
        })
        .collect();
    let members = grid
        .iter()
        .filter(|p| family_member(p).is_ok_and(|m| m.embdim() == 5))
        .count();
    let grid_bad: Vec<String> = results.into_iter().flatten().collect();
    let summary = format!(
        "sweep: {non_cm} quadratic non-CM, {} outside the families; \
         grid: {}/{members} members quadratic, non-CM, revlex qGB",
        bad.len(),
        members - grid_bad.len()
    );
    bad.extend(grid_bad);
    check(bad.is_empty(), || format!("{summary}; {bad:?}"))?;
    Ok(summary)
}

/// A template match with `u'' = 0`, which the families exclude.
fn outside_positive_grid(generators: &[u64]) -> Option<FamilyParams> {
    let top = generators[4];
    for kind in [FamilyKind::I, FamilyKind::II] {
        for u in 1..=top {
            for u_prime in (3..=top).step_by(2) {
                let p = FamilyParams {
                    kind,
                    u,
                    u_prime,
                    u_dprime: 0,
                };
                let mut t = p.template_values().to_vec();
                t.sort_unstable();
                if t == generators {
                    return Some(p);
                }
            }
        }
    }
    None
}

fn construction() -> Outcome {
    let start = Instant::now();
    let tuples: [(usize, &[&[u64]]); 3] = [
        (
            3,
            &[
                &[3, 3, 1],
                &[3, 1, 1],
                &[5, 1, 1],
                &[3, 5, 3],
                &[7, 3, 5],
                &[5, 5, 1],
            ],
        ),
        (
            4,
            &[
                &[3, 1, 1, 1],
                &[5, 3, 1, 1],
                &[3, 3, 3, 3],
                &[3, 1, 3, 1],
                &[7, 1, 1, 3],
            ],
        ),
        (
            5,
            &[
                &[3, 1, 1, 1, 1],
                &[3, 3, 1, 1, 1],
                &[5, 1, 1, 1, 1],
                &[3, 1, 3, 1, 1],
                &[3, 3, 3, 3, 3],
            ],
        ),
    ];
    let mut count = 0;
    for (n, list) in tuples {
        for u in list {
            let c = construct_general(&ConstructionParams::new(n, u.to_vec()).unwrap())
                .map_err(|e| format!("n={n} u={u:?}: {e}"))?;
            let s = &c.semigroup;
            let t = toric_ideal(s);
            for f in c.sorted_relations() {
                check(t.contains(&f), || format!("{s}: {f} not in I_H"))?;
            }
            let istar = initial_forms_ideal(&t);
            let nv = n + 2;
            // x_{n+2} is the variable of a_{n+2}
            let top = c.sorted_position[nv - 1];
            let colon = istar.colon(&Polynomial::var(top));
            check(colon.same_ideal(&maximal(nv)), || {
                format!("{s}: I*:x_(n+2) = {colon}")
            })?;
            check(!is_cm_ideal(&istar), || format!("{s}: CM"))?;
            for p in c.prefixes() {
                check(is_ci(&p), || format!("{s}: prefix {p} not CI"))?;
            }
            count += 1;
        }
    }
    Ok(format!(
        "{count} tuples for n=3,4,5, {:.2}s",
        start.elapsed().as_secs_f64()
    ))
}

fn negativity() -> Outcome {
    let cases: [(&[u64], usize, i64); 2] = [(&[1, 4, 5], 6, -29), (&[1, 4, 5, 1], 8, -174)];
    let mut out = Vec::new();
    for (hv, i, c) in cases {
        let got = poincare_negativity(&HPolynomial::new(hv.to_vec()).unwrap(), 30);
        let want = Some((i, num_bigint::BigInt::from(c)));
        check(got == want, || format!("{hv:?}: {got:?}"))?;
        out.push(format!("{hv:?}: {c} at t^{i}"));
    }
    Ok(out.join("; "))
}

const J1: &str = "x2^2, x5^2, x3^2 - x2*x4, x4^2, x2*x3, x2*x5, x3*x4, x4*x5";
const J2: &str = "x2^2, x5^2, x3^2 - x2*x4, x4^2 - x2*x5, x2*x3, x3*x4, x3*x5";
const J3: &str = "x2^2, x5^2, x3^2 - x2*x4, x4^2, x2*x3, x3*x4, x3*x5";
const ACTIVE: [usize; 4] = [1, 2, 3, 4];

fn vars(s: &str) -> BTreeSet<usize> {
    parse_var_ideal(s, &ACTIVE).unwrap()
}

/// Checks `J:I=K` with `I = J + (x)` independently of the filtration code.
fn identity_holds(j: &Ideal, id: &str) -> bool {
    let (lhs, rhs) = id.split_once('=').unwrap();
    let (base, bigger) = lhs.split_once(':').unwrap();
    let (base, bigger) = (vars(base), vars(bigger));
    let extra: Vec<usize> = bigger.difference(&base).copied().collect();
    extra.len() == 1 && linear_colon(j, &ACTIVE, &base, extra[0]) == Some(vars(rhs))
}

fn filtrations() -> Outcome {
    let j1 = ideal(J1, 5);
    let j1_family = ["0", "(x2)", "(x2,x5)", "(x2,x3,x5)", "(x2,x4,x5)", "m"];
    let j1_ids = [
        "0:(x2)=(x2,x3,x5)",
        "(x2):(x2,x5)=(x2,x4,x5)",
        "(x2,x5):(x2,x3,x5)=(x2,x3,x4,x5)",
        "(x2,x5):(x2,x4,x5)=(x2,x3,x4,x5)",
        "(x2,x3,x5):(x2,x3,x4,x5)=(x2,x3,x4,x5)",
        "(x2,x4,x5):(x2,x3,x4,x5)=(x2,x3,x4,x5)",
    ];
    let j23_family = [
        "0",
        "(x5)",
        "(x3,x5)",
        "(x2,x5)",
        "(x2,x4,x5)",
        "(x2,x3,x5)",
        "m",
    ];
    let j23_ids = [
        "0:(x5)=(x3,x5)",
        "(x5):(x3,x5)=(x2,x4,x5)",
        "(x5):(x2,x5)=(x2,x3,x5)",
        "(x3,x5):(x2,x3,x5)=(x2,x3,x4,x5)",
        "(x2,x5):(x2,x4,x5)=(x2,x3,x4,x5)",
        "(x2,x3,x5):(x2,x3,x4,x5)=(x2,x3,x4,x5)",
        "(x2,x4,x5):(x2,x3,x4,x5)=(x2,x3,x4,x5)",
    ];
    let cases = [
        (J1, &j1_family[..], &j1_ids[..]),
        (J2, &j23_family[..], &j23_ids[..]),
        (J3, &j23_family[..], &j23_ids[..]),
    ];
    for (text, fam, ids) in cases {
        let j = ideal(text, 5);
        let f = FiltrationFamily::new(
            j.clone(),
            ACTIVE.to_vec(),
            fam.iter().map(|s| vars(s)).collect(),
        );
        let (ok, trace) = verify_koszul_filtration(&f);
        check(ok, || format!("{text}: {trace}"))?;
        for r in &trace.records {
            check(identity_holds(&j, &r.identity()), || {
                format!("trace identity {} fails", r.identity())
            })?;
        }
        for id in ids {
            check(identity_holds(&j, id), || format!("{text}: {id} fails"))?;
        }
        let traced: Vec<String> = trace.records.iter().map(|r| r.identity()).collect();
        check(traced.iter().all(|t| ids.contains(&t.as_str())), || {
            format!("trace has identities outside the published list: {traced:?}")
        })?;
    }
    check(grobner_flag_search(&j1, &ACTIVE).is_none(), || {
        "J1 has a Groebner flag".into()
    })?;
    let literal = ["0", "(x2)", "(x2,x3)", "(x2,x3,x5)", "(x2,x4,x5)", "m"];
    let lit = FiltrationFamily::new(
        j1,
        ACTIVE.to_vec(),
        literal.iter().map(|s| vars(s)).collect(),
    );
    let lit_ok = verify_koszul_filtration(&lit).0;
    Ok(format!(
        "J1, J2, J3 families verify with all {} published identities, J1 has no flag \
         (J1 family with (x2,x3) in place of (x2,x5): {})",
        j1_ids.len() + j23_ids.len(),
        if lit_ok {
            "verifies"
        } else {
            "fails, (x2):(x3) = (x2,x3,x4)"
        }
    ))
}

fn nonexistence() -> Outcome {
    let allowed = ["x3^3", "x2*x4*x5", "x2*x4^2"];
    let mut seen = BTreeSet::new();
    for (name, text, expect) in [("J1", J1, false), ("J2", J2, true), ("J3", J3, true)] {
        let (none, reports) =
            quadratic_gb_nonexistence(&ideal(text, 5)).map_err(|e| e.to_string())?;
        check(none == expect, || format!("{name}: {none}"))?;
        if expect {
            for r in reports.iter().filter(|r| r.weights.is_some()) {
                let o = r.obstruction.clone().unwrap_or_default();
                check(allowed.contains(&o.as_str()), || {
                    format!("{name}: obstruction {o}")
                })?;
                seen.insert(o);
            }
        }
    }
    check(seen.len() == 3, || format!("obstructions {seen:?}"))?;
    Ok(format!(
        "J2, J3 have none, J1 has one; obstructions {}",
        seen.into_iter().collect::<Vec<_>>().join(", ")
    ))
}

fn bounds(sweeps: &[&Sweep]) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for r in sweeps
        .iter()
        .flat_map(|s| &s.records)
        .filter(|r| r.is_quadratic)
    {
        checked += 1;
        let n = r.embdim as u32;
        let e = r.multiplicity;
        let top = 1u64 << (n - 1);
        if (e as u32) < n || e > top {
            bad.push(format!("{}: e out of [n, 2^(n-1)]", r.key));
        }
        if is_ci(&h(&r.generators)) != (e == top) {
            bad.push(format!("{}: CI vs e = 2^(n-1)", r.key));
        }
        if r.is_cm && e < top && n >= 3 && e > top - (1u64 << (n - 3)) {
            bad.push(format!("{}: CM bound", r.key));
        }
        if r.is_cm {
            let hp = HPolynomial::from_signed(&r.h_vector).map_err(|e| e.to_string())?;
            if !growth_bound_check(&hp) {
                bad.push(format!("{}: growth bound", r.key));
            }
        }
        if r.h_vector.iter().skip(1).any(|&c| c < 0) {
            bad.push(format!("{}: Hilbert function decreases", r.key));
        }
    }
    check(bad.is_empty(), || format!("{bad:?}"))?;
    Ok(format!("{checked} quadratic records, 0 violations"))
}

fn small_embdim(s: &Sweep) -> Outcome {
    check(s.errors.is_empty(), || {
        format!("{:?}", &s.errors[..s.errors.len().min(3)])
    })?;
    let quad: Vec<&ClassificationRecord> = s.records.iter().filter(|r| r.is_quadratic).collect();
    let bad: Vec<&str> = quad
        .iter()
        .filter(|r| !r.is_cm)
        .map(|r| r.key.as_str())
        .collect();
    check(bad.is_empty(), || format!("non-CM: {bad:?}"))?;
    Ok(format!(
        "{} semigroups, {} quadratic, all CM",
        s.candidates,
        quad.len()
    ))
}

fn main() {
    let mut failed = 0;
    let mut report = |n: usize, name: &str, o: Outcome| match o {
        Ok(d) => println!("criterion {n:>2} PASS {name}: {d}"),
        Err(d) => {
            failed += 1;
            println!("criterion {n:>2} FAIL {name}: {d}");
        }
    };
    report(1, "golden example", golden());
    report(2, "reference table", table1());
    let t = Instant::now();
    let five = sweep(&SweepSpec::new(5, (1, 16), 60).necessary_only());
    let five_secs = t.elapsed().as_secs_f64();
    report(
        3,
        "dual oracles",
        dual_oracle(&five).map(|d| format!("{d}, sweep {five_secs:.0}s")),
    );
    report(4, "classification", classification(&five));
    report(5, "construction", construction());
    report(6, "Poincare negativity", negativity());
    report(7, "Koszul filtrations", filtrations());
    report(8, "quadratic GB nonexistence", nonexistence());
    let small: Vec<Sweep> = (2..=4)
        .map(|e| sweep(&SweepSpec::new(e, (1, 8), 40)))
        .collect();
    let mut all = vec![&five];
    all.extend(small.iter());
    report(9, "bounds", bounds(&all));
    let merged = Sweep {
        candidates: small.iter().map(|s| s.candidates).sum(),
        errors: small.iter().flat_map(|s| s.errors.clone()).collect(),
        records: small.into_iter().flat_map(|s| s.records).collect(),
    };
    report(10, "embedding dimension below five", small_embdim(&merged));
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
