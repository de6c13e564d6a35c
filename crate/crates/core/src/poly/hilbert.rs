//! Hilbert series of monomial quotients.

use super::ideal::Ideal;
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Integer polynomial in `t`, lowest coefficient first.
pub type IntPoly = Vec<i64>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn shift(a: &IntPoly, d: usize) -> IntPoly {
    let mut out = vec![0; d];
    out.extend_from_slice(a);
    trim(out)
}

fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| m.degree());
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator `N(t)` with `HS(S/M) = N(t) / (1-t)^n`, by pivot splitting:
/// `N(M) = N(M + (p)) + t^deg(p) N(M : p)` with `p` a power of the most
/// frequent variable.
pub fn numerator_of_monomials(gens: &[Monomial]) -> IntPoly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![1], |acc, m| {
            let mut f = vec![0; m.degree() as usize + 1];
            f[0] = 1;
            f[m.degree() as usize] = -1;
            mul(&acc, &f)
        });
    }
    let mut counts = [0usize; super::monomial::MAX_VARS];
    for m in &gens {
        for v in m.support() {
            counts[v] += 1;
        }
    }
    let var = (0..counts.len()).max_by_key(|&v| counts[v]).unwrap();
    let e = gens
        .iter()
        .map(|m| m.exponent(var))
        .filter(|&e| e > 0)
        .min()
        .unwrap();
    let pivot = Monomial::var_pow(var, e);

    let mut with_pivot: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exponent(var) == 0)
        .copied()
        .collect();
    with_pivot.push(pivot);
    let quotient: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let k = m.exponent(var).saturating_sub(e);
            m.without(var).mul(&Monomial::var_pow(var, k))
        })
        .collect();
    add(
        &numerator_of_monomials(&with_pivot),
        &shift(&numerator_of_monomials(&quotient), e as usize),
    )
}

/// Hilbert-series numerator of `S/M` over `(1-t)^nvars` for a monomial ideal.
pub fn hilbert_numerator(m: &Ideal) -> Result<IntPoly> {
    if let Some(g) = m.gens().iter().find(|g| !g.is_monomial()) {
        return Err(Error::NotMonomial(g.to_string()));
    }
    let monos: Vec<Monomial> = m.gens().iter().map(|g| *g.lm()).collect();
    Ok(numerator_of_monomials(&monos))
}

/// Cancels factors `(1-t)` from `numerator / (1-t)^nvars`; returns the
/// h-polynomial and the Krull dimension.
pub fn reduce_numerator(numerator: &IntPoly, nvars: usize) -> (IntPoly, usize) {
    let mut h = numerator.clone();
    let mut d = nvars;
    while d > 0 && h.iter().sum::<i64>() == 0 && h.iter().any(|&c| c != 0) {
        // synthetic division by (1 - t)
        let mut q = vec![0; h.len() - 1];
        let mut acc = 0;
        for i in 0..h.len() - 1 {
            acc += h[i];
            q[i] = acc;
        }
        h = trim(q);
        d -= 1;
    }
    (h, d)
}

/// First `len` coefficients of `numerator / (1-t)^nvars`.
pub fn series_coefficients(numerator: &IntPoly, nvars: usize, len: usize) -> Vec<i64> {
    let mut s: Vec<i64> = (0..len)
        .map(|i| numerator.get(i).copied().unwrap_or(0))
        .collect();
    for _ in 0..nvars {
        for i in 1..len {
            s[i] += s[i - 1];
        }
    }
    s
}
