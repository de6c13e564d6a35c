use std::collections::BTreeSet;

use proptest::prelude::*;

use quadcone::koszul::{
    binom, binomial_decomposition, grobner_flag_search, growth_bound_check, parse_var_ideal,
    poincare_negativity, quadratic_gb_nonexistence, verify_koszul_filtration, FiltrationFamily,
    HPolynomial,
};
use quadcone::poly::{Ideal, MonomialOrder, Polynomial};
use quadcone::search::REFERENCE_EXAMPLES;

const J1: &str = "x2^2, x5^2, x3^2 - x2*x4, x4^2, x2*x3, x2*x5, x3*x4, x4*x5";
const J2: &str = "x2^2, x5^2, x3^2 - x2*x4, x4^2 - x2*x5, x2*x3, x3*x4, x3*x5";
const J3: &str = "x2^2, x5^2, x3^2 - x2*x4, x4^2, x2*x3, x3*x4, x3*x5";
const ACTIVE: [usize; 4] = [1, 2, 3, 4];

fn ideal(s: &str) -> Ideal {
    Ideal::parse(s, Some(5)).unwrap()
}

fn quadratic_basis(j: &Ideal, o: &MonomialOrder) -> bool {
    j.basis(o).iter().all(|g| g.degree() == 2)
}

/// Recomputes every colon of a trace from scratch.
fn reverify(j: &Ideal, f: &FiltrationFamily) -> bool {
    let (ok, trace) = verify_koszul_filtration(f);
    if !ok {
        return false;
    }
    let n = j.nvars();
    let vars =
        |s: &str| -> Vec<usize> { parse_var_ideal(s, &ACTIVE).unwrap().into_iter().collect() };
    trace.records.iter().all(|r| {
        let x = vars(&r.var)[0];
        let lhs = Ideal::new(
            j.gens()
                .iter()
                .cloned()
                .chain(vars(&r.base).into_iter().map(Polynomial::var))
                .collect(),
            n,
        )
        .colon(&Polynomial::var(x));
        let rhs = Ideal::new(
            j.gens()
                .iter()
                .cloned()
                .chain(
                    vars(r.result.as_deref().unwrap())
                        .into_iter()
                        .map(Polynomial::var),
                )
                .collect(),
            n,
        );
        lhs.same_ideal(&rhs)
    })
}

fn quadric_monomials() -> Vec<String> {
    let mut out = Vec::new();
    for i in 2..=5 {
        for j in i..=5 {
            out.push(if i == j {
                format!("x{i}^2")
            } else {
                format!("x{i}*x{j}")
            });
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn no_weight_order_gives_j2_or_j3_a_quadratic_basis(w in prop::collection::vec(1u64..50, 5)) {
        let o = MonomialOrder::weighted(w);
        prop_assert!(!quadratic_basis(&ideal(J2), &o));
        prop_assert!(!quadratic_basis(&ideal(J3), &o));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn flags_are_filtrations(mask in 1u32..1024, binomial in any::<bool>()) {
        let q = quadric_monomials();
        let mut gens: Vec<String> = (0..10).filter(|k| mask & (1 << k) != 0).map(|k| q[k].clone()).collect();
        if binomial && !gens.contains(&"x3^2".to_string()) {
            gens.push("x3^2 - x2*x4".into());
        }
        let j = ideal(&gens.join(", "));
        if let Some(flag) = grobner_flag_search(&j, &ACTIVE) {
            let f = FiltrationFamily::flag(j.clone(), &flag);
            prop_assert!(f.chain_flag);
            prop_assert!(reverify(&j, &f));
        }
    }

    #[test]
    fn macaulay_decomposition_recomposes(a in 1u64..5000, m in 1usize..6) {
        let d = binomial_decomposition(a, m);
        prop_assert_eq!(d.iter().map(|&(b, j)| binom(b, j)).sum::<u64>(), a);
        prop_assert!(d.windows(2).all(|w| w[0].0 > w[1].0 && w[0].1 == w[1].1 + 1));
    }
}

#[test]
fn weight_sampling_can_find_the_j1_basis() {
    // control: grevlex x2 > x3 > x4 > x5 gives J1 a quadratic basis
    let o = MonomialOrder::with_priority(quadcone::poly::OrderKind::GrevLex, &[1, 2, 3, 4, 0]);
    assert!(quadratic_basis(&ideal(J1), &o));
    assert!(!quadratic_gb_nonexistence(&ideal(J1)).unwrap().0);
}

#[test]
fn published_filtrations_survive_independent_recomputation() {
    let fam = |members: &[&str]| -> Vec<BTreeSet<usize>> {
        members
            .iter()
            .map(|s| parse_var_ideal(s, &ACTIVE).unwrap())
            .collect()
    };
    let j1 = ideal(J1);
    let f = FiltrationFamily::new(
        j1.clone(),
        ACTIVE.to_vec(),
        fam(&["0", "(x2)", "(x2,x5)", "(x2,x3,x5)", "(x2,x4,x5)", "m"]),
    );
    assert!(reverify(&j1, &f));
    for text in [J2, J3] {
        let j = ideal(text);
        let f = FiltrationFamily::new(
            j.clone(),
            ACTIVE.to_vec(),
            fam(&[
                "0",
                "(x5)",
                "(x3,x5)",
                "(x2,x5)",
                "(x2,x4,x5)",
                "(x2,x3,x5)",
                "m",
            ]),
        );
        assert!(reverify(&j, &f));
    }
}

#[test]
fn quadratic_gb_rows_have_no_negativity_and_satisfy_growth() {
    for (g, hv, cm, qgb) in REFERENCE_EXAMPLES {
        let h = HPolynomial::from_signed(hv).unwrap();
        if *qgb {
            assert_eq!(poincare_negativity(&h, 30), None, "{g:?}");
        }
        if *cm {
            assert!(growth_bound_check(&h), "{g:?}");
        }
    }
}
