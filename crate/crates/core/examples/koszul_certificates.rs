//! Koszul certificates: Poincare negativity, filtrations, Groebner flags and
//! the nonexistence of a quadratic Groebner basis.

use quadcone::koszul::{
    grobner_flag_search, parse_var_ideal, poincare_negativity, quadratic_gb_nonexistence,
    verify_koszul_filtration, FiltrationFamily, HPolynomial,
};
use quadcone::poly::Ideal;

const ACTIVE: [usize; 4] = [1, 2, 3, 4];

fn family(members: &[&str]) -> quadcone::Result<Vec<std::collections::BTreeSet<usize>>> {
    members
        .iter()
        .map(|s| parse_var_ideal(s, &ACTIVE))
        .collect()
}

fn main() -> quadcone::Result<()> {
    for hv in [vec![1, 4, 5], vec![1, 4, 5, 1], vec![1, 4, 3]] {
        let h = HPolynomial::new(hv)?;
        match poincare_negativity(&h, 20) {
            Some((i, c)) => println!("1/h(-t) for h = {h}: coefficient {c} at t^{i}"),
            None => println!("1/h(-t) for h = {h}: nonnegative up to t^20"),
        }
    }

    let j1 = Ideal::parse(
        "x2^2, x5^2, x3^2 - x2*x4, x4^2, x2*x3, x2*x5, x3*x4, x4*x5",
        Some(5),
    )?;
    let f = FiltrationFamily::new(
        j1.clone(),
        ACTIVE.to_vec(),
        family(&["0", "(x2)", "(x2,x5)", "(x2,x3,x5)", "(x2,x4,x5)", "m"])?,
    );
    let (ok, trace) = verify_koszul_filtration(&f);
    println!("\nJ1 filtration: {ok}\n{trace}");
    println!("J1 Groebner flag: {:?}", grobner_flag_search(&j1, &ACTIVE));

    let j3 = Ideal::parse(
        "x2^2, x5^2, x3^2 - x2*x4, x4^2, x2*x3, x3*x4, x3*x5",
        Some(5),
    )?;
    let (none, markings) = quadratic_gb_nonexistence(&j3)?;
    println!("\nJ3 has no quadratic GB for any term order: {none}");
    for m in markings {
        println!("  {m}");
    }
    Ok(())
}
