//! Certificates for and against Koszulness of a standard graded quotient:
//! Poincaré-series negativity, Koszul filtrations and Gröbner flags,
//! nonexistence of quadratic Gröbner bases, and the growth bound for
//! h-vectors of quotients containing all squares.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::hilbert::{numerator_of_monomials, series_coefficients};
use crate::poly::{
    normal_form, spoly, Ideal, Monomial, MonomialOrder, OrderKind, Polynomial, Rational,
};

pub const DEFAULT_TRUNCATION: usize = 30;

/// An h-polynomial `h_0 + h_1 t + ... + h_s t^s` with `h_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HPolynomial(Vec<u64>);

impl HPolynomial {
    pub fn new(coefficients: Vec<u64>) -> Result<Self> {
        if coefficients.first() != Some(&1) {
            return Err(Error::InvalidParams(format!(
                "h-polynomial must start with 1, got {coefficients:?}"
            )));
        }
        if coefficients.last() == Some(&0) {
            return Err(Error::InvalidParams(format!(
                "h-polynomial has a zero trailing coefficient: {coefficients:?}"
            )));
        }
        Ok(HPolynomial(coefficients))
    }

    /// From a signed h-vector; fails on negative entries.
    pub fn from_signed(h: &[i64]) -> Result<Self> {
        if h.iter().any(|&c| c < 0) {
            return Err(Error::InvalidParams(format!(
                "negative h-vector entry in {h:?}"
            )));
        }
        Self::new(h.iter().map(|&c| c as u64).collect())
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn multiplicity(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for HPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", c.join(","))
    }
}

/// Coefficients `0..=n` of `(1+t)^k / h(-t)`.
pub fn poincare_coefficients(h: &HPolynomial, one_plus_t_power: u32, n: usize) -> Vec<BigInt> {
    let q: Vec<BigInt> =
        h.0.iter()
            .enumerate()
            .map(|(i, &c)| {
                if i % 2 == 0 {
                    BigInt::from(c)
                } else {
                    -BigInt::from(c)
                }
            })
            .collect();
    let mut inv: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        if k == 0 {
            inv.push(BigInt::from(1));
            continue;
        }
        let mut acc = BigInt::zero();
        for i in 1..=k.min(q.len() - 1) {
            acc -= &q[i] * &inv[k - i];
        }
        inv.push(acc);
    }
    for _ in 0..one_plus_t_power {
        for k in (1..=n).rev() {
            let prev = inv[k - 1].clone();
            inv[k] += prev;
        }
    }
    inv
}

/// First negative coefficient (index, value) of `1/h(-t)` up to `t^n`.
/// A Koszul algebra with h-polynomial `h` has Poincaré series `1/h(-t)`,
/// so a negative coefficient proves it is not Koszul.
pub fn poincare_negativity(h: &HPolynomial, n: usize) -> Option<(usize, BigInt)> {
    first_negative(&poincare_coefficients(h, 0, n))
}

fn first_negative(c: &[BigInt]) -> Option<(usize, BigInt)> {
    c.iter()
        .enumerate()
        .find(|(_, v)| v.is_negative())
        .map(|(i, v)| (i, v.clone()))
}

/// `x{i+1}` names for a set of zero-based variable indices, e.g. `(x2,x3)`,
/// and `0` for the empty set.
pub fn format_var_ideal(vars: &BTreeSet<usize>) -> String {
    if vars.is_empty() {
        return "0".to_string();
    }
    let v: Vec<String> = vars.iter().map(|v| format!("x{}", v + 1)).collect();
    format!("({})", v.join(","))
}

/// Parses `0`, `m`, `(x2,x3)` or `x2,x3` into zero-based indices; `m` is the
/// full set of `active` variables.
pub fn parse_var_ideal(s: &str, active: &[usize]) -> Result<BTreeSet<usize>> {
    let t = s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .trim();
    if t == "0" || t.is_empty() {
        return Ok(BTreeSet::new());
    }
    if t == "m" {
        return Ok(active.iter().copied().collect());
    }
    t.split(',')
        .enumerate()
        .map(|(pos, v)| {
            let v = v.trim();
            v.strip_prefix('x')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&d| (1..=crate::poly::MAX_VARS).contains(&d))
                .map(|d| d - 1)
                .ok_or_else(|| Error::Parse {
                    input: s.to_string(),
                    position: pos,
                    message: format!("`{v}` is not a variable"),
                })
        })
        .collect()
}

/// A family of ideals generated by subsets of the variables of
/// `R = K[active]/J`, where `J` lives in a ring with `ideal.nvars()`
/// variables.
#[derive(Clone, Debug)]
pub struct FiltrationFamily {
    pub ideal: Ideal,
    pub active: Vec<usize>,
    pub family: Vec<BTreeSet<usize>>,
    pub chain_flag: bool,
}

impl FiltrationFamily {
    pub fn new(ideal: Ideal, active: Vec<usize>, family: Vec<BTreeSet<usize>>) -> Self {
        let mut sorted = family.clone();
        sorted.sort_by_key(|s| s.len());
        let chain_flag = sorted.windows(2).all(|w| w[0].is_subset(&w[1]));
        FiltrationFamily {
            ideal,
            active,
            family,
            chain_flag,
        }
    }

    /// The flag `0 ⊂ (y1) ⊂ (y1,y2) ⊂ ... ⊂ m`.
    pub fn flag(ideal: Ideal, order: &[usize]) -> Self {
        let family = (0..=order.len())
            .map(|k| order[..k].iter().copied().collect())
            .collect();
        Self::new(ideal, order.to_vec(), family)
    }

    fn contains(&self, s: &BTreeSet<usize>) -> bool {
        self.family.iter().any(|f| f == s)
    }
}

/// One checked identity `base : (x_var) = result` in `R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonRecord {
    pub ideal: String,
    pub base: String,
    pub var: String,
    /// `None` when the colon is not generated by variables.
    pub result: Option<String>,
    pub in_family: bool,
}

impl ColonRecord {
    /// `J:I=result` as in `(x2):(x2,x5)=(x2,x4,x5)`; since `I = J + (x)`
    /// this is also `J:(x)`.
    pub fn identity(&self) -> String {
        format!(
            "{}:{}={}",
            self.base,
            self.ideal,
            self.result.as_deref().unwrap_or("<not linear>")
        )
    }
}

impl fmt::Display for ColonRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "kind=colon ideal={} base={} var={} colon={} in_family={} identity={}",
            self.ideal,
            self.base,
            self.var,
            self.result.as_deref().unwrap_or("none"),
            self.in_family,
            self.identity()
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationTrace {
    pub records: Vec<ColonRecord>,
    /// Reasons the family failed, one per line.
    pub failures: Vec<String>,
}

impl fmt::Display for FiltrationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(f, "{r}")?;
        }
        for m in &self.failures {
            writeln!(f, "kind=failure reason=\"{m}\"")?;
        }
        Ok(())
    }
}

/// Colons `(J + (base)) : x_var` in the ambient ring, reduced to their
/// variable part when they are generated by variables modulo `J`.
struct ColonCache<'a> {
    ideal: &'a Ideal,
    active: &'a [usize],
    memo: HashMap<(BTreeSet<usize>, usize), Option<BTreeSet<usize>>>,
}

impl<'a> ColonCache<'a> {
    fn new(ideal: &'a Ideal, active: &'a [usize]) -> Self {
        ColonCache {
            ideal,
            active,
            memo: HashMap::new(),
        }
    }

    fn colon(&mut self, base: &BTreeSet<usize>, var: usize) -> Option<BTreeSet<usize>> {
        let key = (base.clone(), var);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = linear_colon(self.ideal, self.active, base, var);
        self.memo.insert(key, v.clone());
        v
    }
}

/// The variables `V` with `(J + (base)) : x_var = J + (V)`, if such `V`
/// exists.
pub fn linear_colon(
    ideal: &Ideal,
    active: &[usize],
    base: &BTreeSet<usize>,
    var: usize,
) -> Option<BTreeSet<usize>> {
    let n = ideal.nvars();
    let b: Vec<usize> = base.iter().copied().collect();
    let lifted = ideal.sum(&Ideal::variables(&b, n));
    let colon = lifted.colon(&Polynomial::var(var));
    if colon.is_unit() {
        return None;
    }
    let vars: BTreeSet<usize> = active
        .iter()
        .copied()
        .filter(|&v| colon.contains(&Polynomial::var(v)))
        .collect();
    let v: Vec<usize> = vars.iter().copied().collect();
    let expected = ideal.sum(&Ideal::variables(&v, n));
    expected.same_ideal(&colon).then_some(vars)
}

/// Checks the Koszul filtration axioms: `0` and `m` belong to the family,
/// and every nonzero member `I` has a member `J = I \ {x}` with
/// `J : x` (in `R`) again in the family.
pub fn verify_koszul_filtration(f: &FiltrationFamily) -> (bool, FiltrationTrace) {
    let mut cache = ColonCache::new(&f.ideal, &f.active);
    verify_with_cache(f, &mut cache)
}

fn verify_with_cache(f: &FiltrationFamily, cache: &mut ColonCache) -> (bool, FiltrationTrace) {
    let mut trace = FiltrationTrace::default();
    let zero = BTreeSet::new();
    let full: BTreeSet<usize> = f.active.iter().copied().collect();
    if !f.contains(&zero) {
        trace.failures.push("family does not contain 0".into());
    }
    if !f.contains(&full) {
        trace
            .failures
            .push("family does not contain the maximal ideal".into());
    }
    if let Some(bad) = f.family.iter().find(|s| !s.is_subset(&full)) {
        trace
            .failures
            .push(format!("{} uses inactive variables", format_var_ideal(bad)));
    }
    if !trace.failures.is_empty() {
        return (false, trace);
    }
    let mut members: Vec<&BTreeSet<usize>> = f.family.iter().collect();
    members.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
    members.dedup();
    let mut ok = true;
    for ideal in members.into_iter().filter(|s| !s.is_empty()) {
        let mut found = None;
        let mut attempts = Vec::new();
        for &x in ideal {
            let mut base = ideal.clone();
            base.remove(&x);
            if !f.contains(&base) {
                continue;
            }
            let result = cache.colon(&base, x);
            let in_family = result.as_ref().is_some_and(|r| f.contains(r));
            let rec = ColonRecord {
                ideal: format_var_ideal(ideal),
                base: format_var_ideal(&base),
                var: format!("x{}", x + 1),
                result: result.as_ref().map(format_var_ideal),
                in_family,
            };
            if in_family {
                found = Some(rec);
                break;
            }
            attempts.push(rec);
        }
        match found {
            Some(rec) => trace.records.push(rec),
            None => {
                ok = false;
                trace.records.extend(attempts);
                trace
                    .failures
                    .push(format!("no witness for {}", format_var_ideal(ideal)));
            }
        }
    }
    (ok, trace)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Searches all orderings `y1, ..., yk` of `active` for a flag
/// `0 ⊂ (y1) ⊂ ... ⊂ m` that is a Koszul filtration.
pub fn grobner_flag_search(ideal: &Ideal, active: &[usize]) -> Option<Vec<usize>> {
    assert!(active.len() <= 6, "flag search is limited to six variables");
    let mut cache = ColonCache::new(ideal, active);
    permutations(active).into_iter().find(|p| {
        let fam = FiltrationFamily::flag(ideal.clone(), p);
        verify_with_cache(&fam, &mut cache).0
    })
}

/// Exact feasibility of `A w >= b` by Fourier–Motzkin elimination, with a
/// solution recovered by back-substitution.
pub fn fourier_motzkin(rows: &[(Vec<Rational>, Rational)], nvars: usize) -> Option<Vec<Rational>> {
    let mut stages: Vec<Vec<(Vec<Rational>, Rational)>> = vec![rows.to_vec()];
    for k in (0..nvars).rev() {
        let current = stages.last().unwrap();
        let mut next = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for r in current {
            if r.0[k].is_zero() {
                next.push(r.clone());
            } else if r.0[k].is_negative() {
                neg.push(r);
            } else {
                pos.push(r);
            }
        }
        for p in &pos {
            for q in &neg {
                // p.a_k > 0 > q.a_k: combine to cancel w_k
                let lp = -&q.0[k];
                let lq = p.0[k].clone();
                let a: Vec<Rational> = (0..nvars)
                    .map(|i| &(&p.0[i] * &lp) + &(&q.0[i] * &lq))
                    .collect();
                let b = &(&p.1 * &lp) + &(&q.1 * &lq);
                next.push((a, b));
            }
        }
        next.sort();
        next.dedup();
        stages.push(next);
    }
    if stages
        .last()
        .unwrap()
        .iter()
        .any(|(_, b)| b > &Rational::ZERO)
    {
        return None;
    }
    let mut w = vec![Rational::ZERO; nvars];
    for k in 0..nvars {
        // constraints of the stage in which w_0..w_k are still present
        let stage = &stages[nvars - 1 - k];
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for (a, b) in stage {
            if a[k].is_zero() {
                continue;
            }
            let rest = (0..k).fold(b.clone(), |acc, i| &acc - &(&a[i] * &w[i]));
            let bound = &rest / &a[k];
            if a[k].is_negative() {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            } else {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            }
        }
        w[k] = match (lo, hi) {
            (Some(l), Some(h)) => {
                if l > h {
                    return None;
                }
                l
            }
            (Some(l), None) => l,
            (None, Some(h)) => h,
            (None, None) => Rational::ZERO,
        };
    }
    Some(w)
}

/// One choice of standard (non-leading) monomial in every class of
/// degree-two monomials linked by binomials of `J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkingReport {
    /// Leading monomial of every non-monomial quadric in the degree-two
    /// basis, written `lead>standard`.
    pub marking: Vec<String>,
    /// Positive integer weights realizing the marking, when realizable.
    pub weights: Option<Vec<u64>>,
    /// A cubic S-polynomial remainder, present when the marked quadrics are
    /// not a Gröbner basis.
    pub obstruction: Option<String>,
}

impl fmt::Display for MarkingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kind=marking leads={}", self.marking.join(";"))?;
        match &self.weights {
            None => write!(f, " feasible=false"),
            Some(w) => {
                let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                write!(
                    f,
                    " feasible=true weights={} obstruction={}",
                    w.join(","),
                    self.obstruction.as_deref().unwrap_or("none")
                )
            }
        }
    }
}

/// Classes of degree-two monomials of `J`: either all monomials of the
/// class lie in `J`, or the binomials of `J` span all differences within
/// the class.
fn quadric_classes(ideal: &Ideal) -> Result<(Vec<Monomial>, Vec<Vec<Monomial>>)> {
    let mut monomials: Vec<Monomial> = Vec::new();
    let mut edges: Vec<(Monomial, Monomial)> = Vec::new();
    for g in ideal.gens() {
        if g.degree() != 2 || !g.is_homogeneous() {
            return Err(Error::NotQuadraticInput(format!("{g} is not a quadric")));
        }
        if g.is_monomial() {
            monomials.push(*g.lm());
        } else if g.is_pure_binomial() {
            let t = g.terms();
            edges.push((t[0].0, t[1].0));
        } else {
            return Err(Error::NotQuadraticInput(format!(
                "{g} is neither a monomial nor a pure difference binomial"
            )));
        }
    }
    let mut nodes: Vec<Monomial> = monomials.clone();
    for (a, b) in &edges {
        nodes.push(*a);
        nodes.push(*b);
    }
    nodes.sort_by(|a, b| {
        a.exponents(crate::poly::MAX_VARS)
            .cmp(&b.exponents(crate::poly::MAX_VARS))
    });
    nodes.dedup();
    let idx = |m: &Monomial| nodes.iter().position(|x| x == m).unwrap();
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (a, b) in &edges {
        let (ra, rb) = (find(&mut parent, idx(a)), find(&mut parent, idx(b)));
        parent[ra] = rb;
    }
    let mut groups: HashMap<usize, Vec<Monomial>> = HashMap::new();
    for (i, m) in nodes.iter().enumerate() {
        groups.entry(find(&mut parent, i)).or_default().push(*m);
    }
    let mut in_ideal = Vec::new();
    let mut classes = Vec::new();
    let mut keys: Vec<usize> = groups.keys().copied().collect();
    keys.sort();
    for k in keys {
        let g = groups.remove(&k).unwrap();
        if g.iter().any(|m| monomials.contains(m)) {
            in_ideal.extend(g);
        } else if g.len() > 1 {
            classes.push(g);
        }
    }
    Ok((in_ideal, classes))
}

/// Decides whether a quadratic ideal of monomials and pure binomials
/// admits no quadratic Gröbner basis under any term order.
///
/// Every term order induces a marking (one standard monomial per class);
/// markings not realized by a positive weight vector are discarded. A
/// realizable marking yields a quadratic Gröbner basis iff its leading
/// monomials have the Hilbert function of `J`; otherwise a cubic
/// S-polynomial remainder is recorded as the obstruction.
pub fn quadratic_gb_nonexistence(ideal: &Ideal) -> Result<(bool, Vec<MarkingReport>)> {
    let n = ideal.nvars();
    let (in_ideal, classes) = quadric_classes(ideal)?;
    let target = hilbert_numerator_of(ideal);
    let mut reports = Vec::new();
    let mut choice = vec![0usize; classes.len()];
    loop {
        reports.push(check_marking(
            ideal.gens(),
            n,
            &in_ideal,
            &classes,
            &choice,
            &target,
        ));
        let mut k = 0;
        while k < choice.len() {
            choice[k] += 1;
            if choice[k] < classes[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
    }
    let none = reports
        .iter()
        .all(|r| r.weights.is_none() || r.obstruction.is_some());
    Ok((none, reports))
}

fn hilbert_numerator_of(ideal: &Ideal) -> Vec<i64> {
    let lms = ideal.leading_monomials(&ideal.grevlex());
    numerator_of_monomials(&lms)
}

fn check_marking(
    gens: &[Polynomial],
    n: usize,
    in_ideal: &[Monomial],
    classes: &[Vec<Monomial>],
    choice: &[usize],
    target: &[i64],
) -> MarkingReport {
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for i in 0..n {
        let mut a = vec![Rational::ZERO; n];
        a[i] = Rational::ONE;
        rows.push((a, Rational::ONE));
    }
    let mut marking = Vec::new();
    let mut pairs = Vec::new();
    for (class, &c) in classes.iter().zip(choice) {
        let std = class[c];
        for (j, lead) in class.iter().enumerate() {
            if j == c {
                continue;
            }
            let a: Vec<Rational> = (0..n)
                .map(|i| Rational::from_int(lead.exponent(i) as i64 - std.exponent(i) as i64))
                .collect();
            rows.push((a, Rational::ONE));
            marking.push(format!("{lead}>{std}"));
            pairs.push((*lead, std));
        }
    }
    let Some(w) = fourier_motzkin(&rows, n) else {
        return MarkingReport {
            marking,
            weights: None,
            obstruction: None,
        };
    };
    let weights = integer_weights(&w);
    let order = MonomialOrder::new(
        OrderKind::Weighted {
            weights: weights.clone(),
        },
        n,
    );
    let mut basis: Vec<Polynomial> = in_ideal.iter().map(|m| Polynomial::monomial(*m)).collect();
    for (lead, std) in &pairs {
        basis.push(Polynomial::binomial(*lead, *std, &order));
    }
    for b in basis.iter_mut() {
        b.resort(&order);
    }
    let leads: Vec<Monomial> = basis.iter().map(|b| *b.lm()).collect();
    let matches = numerator_of_monomials(&leads) == target;
    let obstruction = if matches {
        None
    } else {
        Some(find_obstruction(gens, &basis, &order, n))
    };
    MarkingReport {
        marking,
        weights: Some(weights),
        obstruction,
    }
}

fn integer_weights(w: &[Rational]) -> Vec<u64> {
    use num_integer::Integer;
    let mut den: i64 = 1;
    for x in w {
        let d = match x {
            Rational::Small(_, d) => *d,
            Rational::Big(b) => i64::try_from(b.denom().clone()).expect("weight denominator"),
        };
        den = den.lcm(&d);
    }
    w.iter()
        .map(|x| {
            let scaled = x * &Rational::from_int(den);
            scaled.to_i64().expect("integral weight") as u64
        })
        .collect()
}

/// First nonzero S-polynomial remainder, trying pairs of a binomial
/// generator with a monomial generator first (in generator order), then
/// all remaining pairs of the degree-two basis.
fn find_obstruction(
    gens: &[Polynomial],
    basis: &[Polynomial],
    order: &MonomialOrder,
    n: usize,
) -> String {
    let gens: Vec<Polynomial> = gens.iter().map(|g| g.clone().sorted(order)).collect();
    let binomials = gens.iter().filter(|g| !g.is_monomial());
    let mut candidates: Vec<(&Polynomial, &Polynomial)> = Vec::new();
    for b in binomials {
        for m in gens.iter().filter(|g| g.is_monomial()) {
            candidates.push((b, m));
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            candidates.push((&basis[i], &basis[j]));
        }
    }
    let display = MonomialOrder::grevlex(n);
    for (f, g) in candidates {
        if f.lm().is_coprime(g.lm()) {
            continue;
        }
        let r = normal_form(&spoly(f, g, order), basis, order);
        if !r.is_zero() {
            return r.monic().sorted(&display).to_string();
        }
    }
    // leading ideals differ beyond what pairwise S-polynomials show
    "higher degree".to_string()
}

/// Greedy decomposition `a = C(b_m, m) + C(b_{m-1}, m-1) + ...` with
/// `b_m > b_{m-1} > ...`; returns the pairs `(b_j, j)`.
pub fn binomial_decomposition(mut a: u64, m: usize) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    let mut j = m;
    while a > 0 && j >= 1 {
        let mut b = j as u64;
        while binom(b + 1, j) <= a {
            b += 1;
        }
        a -= binom(b, j);
        out.push((b, j));
        j -= 1;
    }
    out
}

pub fn binom(n: u64, k: usize) -> u64 {
    let k = k as u64;
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `h_{m+1} <= C(b_m, m+1) + ... + C(b_1, 2)` for every `m >= 1`, the bound
/// for quotients whose initial ideal contains every variable square.
pub fn growth_bound_check(h: &HPolynomial) -> bool {
    growth_bound_violations(h).is_empty()
}

/// Indices `m + 1` at which the growth bound fails, with the bound.
pub fn growth_bound_violations(h: &HPolynomial) -> Vec<(usize, u64)> {
    let c = h.coefficients();
    let mut bad = Vec::new();
    for m in 1..c.len() {
        let next = c.get(m + 1).copied().unwrap_or(0);
        let bound: u64 = binomial_decomposition(c[m], m)
            .iter()
            .map(|&(b, j)| binom(b, j + 1))
            .sum();
        if next > bound {
            bad.push((m + 1, bound));
        }
    }
    bad
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Koszul,
    NotKoszul,
    Unknown,
}

/// A Koszul verdict with the certificate that supports it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulVerdict {
    pub verdict: Verdict,
    /// `quadratic-gb`, `groebner-flag`, `poincare-negativity`,
    /// `not-quadratic` or `none`.
    pub certificate: String,
    pub detail: String,
}

impl fmt::Display for KoszulVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} ({}: {})",
            self.verdict, self.certificate, self.detail
        )
    }
}

/// Combines the available certificates for the tangent cone with defining
/// ideal `istar`.
///
/// The Poincaré series of a Koszul algebra with Hilbert series `H` is
/// `1/H(-t)`: for a Cohen–Macaulay cone this reduces to the artinian
/// reduction, `1/h(-t)`; otherwise it is `(1+t)/h(-t)`.
pub fn koszul_verdict(
    istar: &Ideal,
    h_vector: &[i64],
    is_cm: bool,
    qgb_order: Option<&str>,
    truncation: usize,
) -> KoszulVerdict {
    if !crate::tangent_cone::is_quadratic(istar) {
        return KoszulVerdict {
            verdict: Verdict::NotKoszul,
            certificate: "not-quadratic".into(),
            detail: "I* has a generator of degree > 2".into(),
        };
    }
    if let Some(o) = qgb_order {
        return KoszulVerdict {
            verdict: Verdict::Koszul,
            certificate: "quadratic-gb".into(),
            detail: format!("revlex {o}"),
        };
    }
    if let Ok(h) = HPolynomial::from_signed(h_vector) {
        let power = if is_cm { 0 } else { 1 };
        if let Some((i, c)) = first_negative(&poincare_coefficients(&h, power, truncation)) {
            return KoszulVerdict {
                verdict: Verdict::NotKoszul,
                certificate: "poincare-negativity".into(),
                detail: format!("coefficient {c} at t^{i}"),
            };
        }
    }
    if is_cm {
        if let Ok(art) = crate::tangent_cone::artinian_reduction(istar) {
            if art.active.len() <= 6 {
                if let Some(flag) = grobner_flag_search(&art.ideal, &art.active) {
                    let names: Vec<String> = flag.iter().map(|v| format!("x{}", v + 1)).collect();
                    return KoszulVerdict {
                        verdict: Verdict::Koszul,
                        certificate: "groebner-flag".into(),
                        detail: names.join(","),
                    };
                }
            }
        }
    }
    KoszulVerdict {
        verdict: Verdict::Unknown,
        certificate: "none".into(),
        detail: format!("no certificate up to t^{truncation}"),
    }
}

/// Series coefficients of `K[active]/J` up to degree `len - 1`, for checks.
pub fn hilbert_function(ideal: &Ideal, len: usize) -> Vec<i64> {
    series_coefficients(&hilbert_numerator_of(ideal), ideal.nvars(), len)
}
