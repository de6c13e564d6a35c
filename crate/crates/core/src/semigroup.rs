//! Arithmetic of numerical semigroups: membership, Apéry sets,
//! factorizations, the order function and the Herzog–Garcia
//! Cohen–Macaulay criterion for the tangent cone.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A numerical semigroup given by its minimal generators `a1 < ... < an`.
///
/// The Apéry set with respect to the multiplicity is computed once at
/// construction and answers membership queries in constant time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    apery: Vec<u64>,
}

/// A representation `m = sum mu_i a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factorization {
    pub coefficients: Vec<u32>,
    pub value: u64,
    pub length: u32,
}

impl Factorization {
    pub fn new(coefficients: Vec<u32>, generators: &[u64]) -> Self {
        let value = coefficients
            .iter()
            .zip(generators)
            .map(|(&c, &g)| c as u64 * g)
            .sum();
        let length = coefficients.iter().sum();
        Factorization {
            coefficients,
            value,
            length,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CmStatus {
    #[serde(rename = "CM")]
    Cm,
    #[serde(rename = "NotCM")]
    NotCm,
}

/// Outcome of the Herzog–Garcia test. A `NotCm` verdict carries the
/// violating vector `nu` (with `nu_1 = 0`) and its value `sum nu_i a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmCertificate {
    pub status: CmStatus,
    pub witness: Option<Vec<u32>>,
    pub witness_value: Option<u64>,
}

impl CmCertificate {
    pub fn is_cm(&self) -> bool {
        self.status == CmStatus::Cm
    }
}

impl fmt::Display for CmCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.witness, self.witness_value) {
            (Some(nu), Some(v)) => write!(f, "NotCM witness nu={nu:?} value={v}"),
            _ => write!(f, "CM"),
        }
    }
}

/// Elements of `<gens>` up to `limit`, by unbounded knapsack.
fn reachable(gens: &[u64], limit: u64) -> Vec<bool> {
    let limit = limit as usize;
    let mut ok = vec![false; limit + 1];
    ok[0] = true;
    for &g in gens {
        let g = g as usize;
        for x in g..=limit {
            if ok[x - g] {
                ok[x] = true;
            }
        }
    }
    ok
}

/// Smallest element of `<gens>` in each residue class modulo `modulus`
/// (`u64::MAX` where unreachable), by Dijkstra over residues.
fn residue_minima(gens: &[u64], modulus: u64) -> Vec<u64> {
    let m = modulus as usize;
    let mut dist = vec![u64::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let nd = d + g;
            let nr = (r + (g % modulus) as usize) % m;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

impl NumericalSemigroup {
    /// The semigroup generated by `candidates`, reduced to its minimal
    /// generating set.
    pub fn minimal_generators(candidates: &[u64]) -> Result<Self> {
        let mut c: Vec<u64> = candidates.iter().copied().filter(|&x| x > 0).collect();
        if c.is_empty() {
            return Err(Error::Empty);
        }
        c.sort_unstable();
        c.dedup();
        let g = c.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::GcdNotOne { gcd: g });
        }
        let max = *c.last().unwrap();
        let mut ok = vec![false; max as usize + 1];
        ok[0] = true;
        let mut gens = Vec::new();
        for &x in &c {
            if ok[x as usize] {
                continue;
            }
            gens.push(x);
            for y in x as usize..=max as usize {
                if ok[y - x as usize] {
                    ok[y] = true;
                }
            }
        }
        Ok(Self::from_minimal_unchecked(gens))
    }

    /// Accepts `gens` only if they already form a minimal generating set
    /// (in any order); otherwise reports the first redundant generator.
    pub fn from_minimal(gens: &[u64]) -> Result<Self> {
        let h = Self::minimal_generators(gens)?;
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        if let Some(&extra) = sorted.iter().find(|g| !h.gens.contains(g)) {
            return Err(Error::NotMinimal {
                generator: extra,
                generators: gens.to_vec(),
            });
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            let dup = sorted.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
            return Err(Error::NotMinimal {
                generator: dup,
                generators: gens.to_vec(),
            });
        }
        Ok(h)
    }

    fn from_minimal_unchecked(gens: Vec<u64>) -> Self {
        let apery = residue_minima(&gens, gens[0]);
        NumericalSemigroup { gens, apery }
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    /// `a_i` with a one-based index, as in the usual notation.
    pub fn generator(&self, i: usize) -> u64 {
        self.gens[i - 1]
    }

    pub fn multiplicity(&self) -> u64 {
        self.gens[0]
    }

    pub fn embdim(&self) -> usize {
        self.gens.len()
    }

    pub fn max_generator(&self) -> u64 {
        *self.gens.last().unwrap()
    }

    pub fn contains(&self, m: u64) -> bool {
        m >= self.apery[(m % self.gens[0]) as usize]
    }

    pub fn contains_i64(&self, m: i64) -> bool {
        m >= 0 && self.contains(m as u64)
    }

    /// Apéry set with respect to `a`, indexed by residue modulo `a`.
    pub fn apery_set(&self, a: u64) -> Result<Vec<u64>> {
        if a == 0 || !self.contains(a) {
            return Err(Error::NotMember { value: a });
        }
        Ok(residue_minima(&self.gens, a))
    }

    pub fn frobenius_number(&self) -> i64 {
        *self.apery.iter().max().unwrap() as i64 - self.gens[0] as i64
    }

    /// Every `mu >= 0` with `sum mu_i a_i = m`, in lexicographic order of
    /// the coefficient vectors.
    pub fn factorizations(&self, m: u64) -> Vec<Factorization> {
        let n = self.gens.len();
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        self.factor_rec(0, m, &mut cur, &mut out);
        out.sort();
        out
    }

    fn factor_rec(&self, i: usize, rest: u64, cur: &mut Vec<u32>, out: &mut Vec<Factorization>) {
        let n = self.gens.len();
        if i == n - 1 {
            if rest.is_multiple_of(self.gens[i]) {
                cur[i] = (rest / self.gens[i]) as u32;
                out.push(Factorization::new(cur.clone(), &self.gens));
                cur[i] = 0;
            }
            return;
        }
        let g = self.gens[i];
        let mut k = 0u64;
        while k * g <= rest {
            cur[i] = k as u32;
            self.factor_rec(i + 1, rest - k * g, cur, out);
            k += 1;
        }
        cur[i] = 0;
    }

    /// The order function (maximal factorization length) on `0..=limit`;
    /// `None` marks non-elements.
    pub fn order_table(&self, limit: u64) -> Vec<Option<u32>> {
        let mut ord: Vec<Option<u32>> = vec![None; limit as usize + 1];
        ord[0] = Some(0);
        for x in 1..=limit as usize {
            let mut best: Option<u32> = None;
            for &g in &self.gens {
                let g = g as usize;
                if g > x {
                    break;
                }
                if let Some(o) = ord[x - g] {
                    best = Some(best.map_or(o + 1, |b| b.max(o + 1)));
                }
            }
            ord[x] = best;
        }
        ord
    }

    /// Maximal length of a factorization of `h`.
    pub fn order(&self, h: u64) -> Result<u32> {
        if !self.contains(h) {
            return Err(Error::NotMember { value: h });
        }
        Ok(self.order_table(h)[h as usize].unwrap())
    }

    fn hilbert_counts(&self, upto: usize) -> Vec<u64> {
        let limit = upto as u64 * self.max_generator();
        let ord = self.order_table(limit);
        let mut hf = vec![0u64; upto + 1];
        for o in ord.iter().flatten() {
            if (*o as usize) <= upto {
                hf[*o as usize] += 1;
            }
        }
        hf
    }

    /// Hilbert function of the tangent cone, `HF(i) = #{h : ord(h) = i}`, for
    /// `i = 0..=upto`.
    pub fn hilbert_function_gr(&self, upto: usize) -> Vec<u64> {
        self.hilbert_counts(upto)
    }

    /// The Hilbert function up to the index where it is stable at `a1`:
    /// the table is extended until `a1` consecutive values equal `a1`, and
    /// the returned vector ends right before that run.
    pub fn stable_hilbert_function(&self) -> Vec<u64> {
        let e = self.multiplicity();
        let run = e as usize;
        let mut upto = 4 * run.max(4);
        loop {
            let hf = self.hilbert_counts(upto);
            let mut start = None;
            let mut len = 0;
            for (i, &v) in hf.iter().enumerate() {
                if v == e {
                    if len == 0 {
                        start = Some(i);
                    }
                    len += 1;
                    if len >= run {
                        break;
                    }
                } else {
                    len = 0;
                    start = None;
                }
            }
            if len >= run {
                let s = start.unwrap();
                return hf[..=s].to_vec();
            }
            upto *= 2;
        }
    }

    /// First differences of the stable Hilbert function, trailing zeros
    /// removed: the h-vector computed from arithmetic alone.
    pub fn h_vector_arithmetic(&self) -> Vec<i64> {
        let hf = self.stable_hilbert_function();
        let mut h: Vec<i64> = hf
            .iter()
            .enumerate()
            .map(|(i, &v)| v as i64 - if i == 0 { 0 } else { hf[i - 1] as i64 })
            .collect();
        while h.len() > 1 && *h.last().unwrap() == 0 {
            h.pop();
        }
        h
    }

    /// `c_i = min { k > 0 : k a_i in <Gen(H) \ {a_i}> }` (one-based `i`).
    pub fn c_value(&self, i: usize) -> u64 {
        let a = self.generator(i);
        let others: Vec<u64> = self
            .gens
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i - 1)
            .map(|(_, &g)| g)
            .collect();
        if others.is_empty() {
            // H = N: no other generators, by convention c_1 = 1
            return 1;
        }
        let bound = *others.iter().min().unwrap();
        let ok = reachable(&others, a * bound);
        (1..=bound).find(|k| ok[(k * a) as usize]).unwrap()
    }

    /// Necessary conditions for a quadratic tangent cone: some
    /// `a1 | a_k + a_l` with `k, l >= 2`, and `2 a_i` in the semigroup of
    /// the other generators for every `i >= 2`.
    pub fn quadratic_necessary(&self) -> bool {
        let n = self.embdim();
        if n < 2 {
            return false;
        }
        let a1 = self.multiplicity();
        let divides = (1..n).any(|k| (k..n).any(|l| (self.gens[k] + self.gens[l]).is_multiple_of(a1)));
        divides && (2..=n).all(|i| self.c_value(i) == 2)
    }

    /// The Herzog–Garcia criterion: for every `0 <= nu_i < c_i` (`i >= 2`)
    /// with `sum nu_i a_i in a1 + H` there must be a factorization with
    /// `mu_1 > 0` and length `>= sum nu_i`.
    ///
    /// The box alone is complete when every `c_i = 2`, which covers all
    /// quadratic semigroups, but not in general: for `<4,5,11>` the only
    /// violation is `15 = 3*5`, outside the box since `c_2 = 3`. When the
    /// box passes, the remaining check is `ord(w + k a1) = ord(w) + k` for
    /// `w` in the Apéry set and `k <= a1`, enough because the reduction
    /// number is below the multiplicity. Either way the witness is a
    /// longest factorization with `nu_1 = 0`.
    pub fn is_cm_tangent_cone(&self) -> CmCertificate {
        let n = self.embdim();
        let cm = CmCertificate {
            status: CmStatus::Cm,
            witness: None,
            witness_value: None,
        };
        if n < 2 {
            return cm;
        }
        let a1 = self.multiplicity();
        let c: Vec<u64> = (2..=n).map(|i| self.c_value(i)).collect();
        let max_value: u64 = (0..n - 1).map(|k| (c[k] - 1) * self.gens[k + 1]).sum();
        let ord = self.order_table(max_value);
        let mut nu = vec![0u64; n - 1];
        loop {
            // odometer over the box, first coordinate fastest
            let mut k = 0;
            while k < nu.len() {
                nu[k] += 1;
                if nu[k] < c[k] {
                    break;
                }
                nu[k] = 0;
                k += 1;
            }
            if k == nu.len() {
                return self.apery_completion().unwrap_or(cm);
            }
            let value: u64 = nu.iter().zip(&self.gens[1..]).map(|(v, g)| v * g).sum();
            let len: u64 = nu.iter().sum();
            if value < a1 {
                continue;
            }
            if let Some(o) = ord[(value - a1) as usize] {
                if (o as u64) + 1 < len {
                    let mut w = vec![0u32];
                    w.extend(nu.iter().map(|&v| v as u32));
                    return CmCertificate {
                        status: CmStatus::NotCm,
                        witness: Some(w),
                        witness_value: Some(value),
                    };
                }
            }
        }
    }

    fn apery_completion(&self) -> Option<CmCertificate> {
        let a1 = self.multiplicity();
        let top = *self.apery.iter().max().unwrap() + a1 * a1;
        let ord = self.order_table(top);
        for &w in &self.apery {
            for k in 1..=a1 {
                let m = w + k * a1;
                let (Some(o), Some(prev)) = (ord[m as usize], ord[(m - a1) as usize]) else {
                    continue;
                };
                if o > prev + 1 {
                    let f = self
                        .factorizations(m)
                        .into_iter()
                        .max_by_key(|f| f.length)
                        .expect("m is an element");
                    return Some(CmCertificate {
                        status: CmStatus::NotCm,
                        witness: Some(f.coefficients),
                        witness_value: Some(m),
                    });
                }
            }
        }
        None
    }

    /// Re-checks a `NotCm` witness by explicit enumeration of factorizations:
    /// `nu_1 = 0`, its value lies in `a1 + H`, and every factorization using
    /// `a1` is shorter than `nu`.
    pub fn verify_cm_witness(&self, nu: &[u32]) -> bool {
        if nu.len() != self.embdim() || nu[0] != 0 {
            return false;
        }
        let value: u64 = nu.iter().zip(&self.gens).map(|(&v, &g)| v as u64 * g).sum();
        let len: u32 = nu.iter().sum();
        if value < self.multiplicity() || !self.contains(value - self.multiplicity()) {
            return false;
        }
        self.factorizations(value)
            .iter()
            .filter(|f| f.coefficients[0] > 0)
            .all(|f| f.length < len)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", g.join(","))
    }
}

/// Parses `8,12,13,18,35` into a list of positive integers.
pub fn parse_generators(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(i, t)| {
            t.parse::<u64>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| Error::Parse {
                    input: s.to_string(),
                    position: i,
                    message: format!("`{t}` is not a positive integer"),
                })
        })
        .collect()
}
