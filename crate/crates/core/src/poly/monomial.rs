use std::fmt;

/// Hard ceiling on the number of ring variables. Every computation in this
/// crate stays well below it (embedding dimension plus two auxiliary
/// variables for elimination and saturation).
pub const MAX_VARS: usize = 12;

/// A power product `x1^e1 * ... * xk^ek` stored as a dense exponent vector.
///
/// Unused trailing slots are zero, so monomials from rings of different size
/// compare sensibly as long as callers stay within one ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
    mask: u16,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            degree: 0,
            mask: 0,
        }
    }

    /// The variable with zero-based index `i`.
    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u32) -> Self {
        let mut m = Self::one();
        m.set(i, e);
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables: {}", exps.len());
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            m.set(i, e);
        }
        m
    }

    fn set(&mut self, i: usize, e: u32) {
        assert!(i < MAX_VARS, "variable index {i} out of range");
        let e16 = u16::try_from(e).expect("exponent overflow");
        self.degree = self.degree - self.exps[i] as u32 + e;
        self.exps[i] = e16;
        if e16 > 0 {
            self.mask |= 1 << i;
        } else {
            self.mask &= !(1 << i);
        }
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Bitmask of variables with positive exponent.
    #[inline]
    pub fn support_mask(&self) -> u16 {
        self.mask
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_VARS).filter(move |&i| self.exps[i] > 0)
    }

    /// One past the highest variable index that occurs.
    pub fn nvars_used(&self) -> usize {
        (u16::BITS - self.mask.leading_zeros()) as usize
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        weights
            .iter()
            .zip(self.exps.iter())
            .map(|(&w, &e)| w * e as u64)
            .sum()
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        out.degree = self.degree + other.degree;
        out.mask = self.mask | other.mask;
        out
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        let mut mask = 0u16;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i] - other.exps[i];
            if out.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        out.degree = self.degree - other.degree;
        out.mask = mask;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Self::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            out.degree += out.exps[i] as u32;
        }
        out.mask = self.mask | other.mask;
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Self::one();
        let mut mask = 0u16;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            out.degree += out.exps[i] as u32;
            if out.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        out.mask = mask;
        out
    }

    /// Inserts `k` new variables in front, shifting every index up by `k`.
    pub fn shift_up(&self, k: usize) -> Monomial {
        let mut out = Self::one();
        for i in 0..MAX_VARS - k {
            if self.exps[i] > 0 {
                out.set(i + k, self.exps[i] as u32);
            }
        }
        assert_eq!(out.degree, self.degree, "shift overflowed variable slots");
        out
    }

    /// Drops the first `k` variables, which must not occur.
    pub fn shift_down(&self, k: usize) -> Monomial {
        debug_assert!(self.exps[..k].iter().all(|&e| e == 0));
        let mut out = Self::one();
        for i in k..MAX_VARS {
            if self.exps[i] > 0 {
                out.set(i - k, self.exps[i] as u32);
            }
        }
        out
    }

    /// Applies a variable permutation: variable `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut out = Self::one();
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                out.set(perm[i], e as u32);
            }
        }
        out
    }

    /// Sets the exponent of variable `i` to zero.
    pub fn without(&self, i: usize) -> Monomial {
        let mut out = *self;
        out.set(i, 0);
        out
    }
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints `x1^2*x3`, or `1` for the unit monomial.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..MAX_VARS {
            let e = self.exps[i];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}
