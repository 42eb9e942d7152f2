//! Exact arithmetic in GF(p^k).
//!
//! A scalar is stored as the base-`p` encoding of its coefficient vector in
//! the polynomial basis `1, t, …, t^{k-1}`: coefficient `c_i` contributes
//! `c_i · p^i`. Every residue class has exactly one encoding, so scalar
//! equality is integer equality.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

const MAX_DEGREE: usize = 16;

/// Element of a finite field, meaningful only together with its [`FieldSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(pub u32);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The field GF(p^k), presented as GF(p)[t]/(modulus).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: u32,
    /// `k + 1` coefficients, lowest degree first, monic. Empty when `k == 1`.
    modulus: Vec<u32>,
}

impl FieldSpec {
    /// GF(p^k). For `k > 1` a missing modulus is replaced by the monic
    /// irreducible polynomial with the smallest encoding.
    pub fn new(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_ORDER as u64);
        let Some(q) = q else {
            return Err(Error::InvalidField(format!("field order {p}^{k} exceeds {MAX_ORDER}")));
        };
        let q = q as u32;
        let modulus = match (k, modulus) {
            (1, None) => Vec::new(),
            (1, Some(_)) => {
                return Err(Error::InvalidField("prime fields take no modulus".into()));
            }
            (_, Some(m)) => {
                if m.len() != k as usize + 1 {
                    return Err(Error::InvalidField(format!(
                        "modulus must have {} coefficients, got {}",
                        k + 1,
                        m.len()
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidField("modulus coefficient out of range".into()));
                }
                if m[k as usize] != 1 {
                    return Err(Error::InvalidField("modulus is not monic".into()));
                }
                if !poly_is_irreducible(p, &m) {
                    return Err(Error::InvalidField("modulus is not irreducible".into()));
                }
                m
            }
            (_, None) => smallest_irreducible(p, k as usize),
        };
        Ok(FieldSpec { p, k, q, modulus })
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field order `p^k`.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, lowest degree first; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn zero(&self) -> Scalar {
        Scalar::ZERO
    }

    #[inline]
    pub fn one(&self) -> Scalar {
        Scalar::ONE
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Scalar {
        Scalar(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Scalar> {
        if coeffs.len() > self.k as usize {
            return Err(Error::InvalidField(format!(
                "{} coefficients given for a degree-{} field",
                coeffs.len(),
                self.k
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::InvalidField(format!("coefficient {c} not below {}", self.p)));
        }
        Ok(self.encode(coeffs))
    }

    /// Coefficients in the polynomial basis, exactly `k` of them.
    pub fn coeffs(&self, a: Scalar) -> Vec<u32> {
        let d = self.digits(a);
        d[..self.k as usize].to_vec()
    }

    #[inline]
    pub fn contains(&self, a: Scalar) -> bool {
        a.0 < self.q
    }

    /// All field elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        (0..self.q).map(Scalar)
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        if self.k == 1 {
            let s = a.0 + b.0;
            return Scalar(if s >= self.p { s - self.p } else { s });
        }
        if self.p == 2 {
            return Scalar(a.0 ^ b.0);
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut out = [0u32; MAX_DEGREE];
        for i in 0..self.k as usize {
            out[i] = (x[i] + y[i]) % self.p;
        }
        self.encode(&out[..self.k as usize])
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if self.k == 1 {
            return Scalar(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        if self.p == 2 {
            return a;
        }
        let x = self.digits(a);
        let mut out = [0u32; MAX_DEGREE];
        for i in 0..self.k as usize {
            out[i] = (self.p - x[i]) % self.p;
        }
        self.encode(&out[..self.k as usize])
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        if a.0 == 0 || b.0 == 0 {
            return Scalar::ZERO;
        }
        if self.k == 1 {
            return Scalar(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        let k = self.k as usize;
        let p = self.p as u64;
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + x[i] as u64 * y[j] as u64) % p;
            }
        }
        // reduce by the monic modulus from the top degree down
        for deg in (k..2 * k - 1).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        let mut out = [0u32; MAX_DEGREE];
        for i in 0..k {
            out[i] = prod[i] as u32;
        }
        self.encode(&out[..k])
    }

    pub fn pow(&self, a: Scalar, mut e: u64) -> Scalar {
        let mut base = a;
        let mut acc = Scalar::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    /// Inverse of a scalar already known to be nonzero.
    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Scalar) -> Scalar {
        debug_assert!(!a.is_zero());
        self.pow(a, self.q as u64 - 2)
    }

    pub fn div(&self, a: Scalar, b: Scalar) -> Result<Scalar> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^(p^n)`. The Frobenius automorphism has order `k`, so `n` is reduced mod `k`.
    pub fn frobenius_n(&self, a: Scalar, n: u32) -> Scalar {
        let mut x = a;
        for _ in 0..n % self.k {
            x = self.pow(x, self.p as u64);
        }
        x
    }

    /// The unique `b` with `frobenius_n(b, n) == a`.
    pub fn inv_frobenius_n(&self, a: Scalar, n: u32) -> Scalar {
        self.frobenius_n(a, (self.k - n % self.k) % self.k)
    }

    /// Short human-readable scalar: an integer for prime fields, `[c0 c1 …]` otherwise.
    pub fn format_scalar(&self, a: Scalar) -> String {
        if self.k == 1 {
            a.0.to_string()
        } else {
            let c: Vec<String> = self.coeffs(a).iter().map(|c| c.to_string()).collect();
            format!("[{}]", c.join(" "))
        }
    }

    #[inline]
    fn digits(&self, a: Scalar) -> [u32; MAX_DEGREE] {
        let mut out = [0u32; MAX_DEGREE];
        let mut v = a.0;
        for d in out.iter_mut().take(self.k as usize) {
            *d = v % self.p;
            v /= self.p;
        }
        out
    }

    #[inline]
    fn encode(&self, coeffs: &[u32]) -> Scalar {
        let mut v = 0u32;
        for &c in coeffs.iter().rev() {
            v = v * self.p + c;
        }
        Scalar(v)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.k)
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let dm = m.len() - 1;
    let p = p as u64;
    while r.len() > dm {
        let lead = r.pop().unwrap() % p;
        if lead != 0 {
            let shift = r.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * c as u64) % p;
            }
        }
    }
    r.into_iter().map(|c| (c % p) as u32).collect()
}

/// Trial division by every monic polynomial of degree at most half the degree of `m`.
fn poly_is_irreducible(p: u32, m: &[u32]) -> bool {
    let n = m.len() - 1;
    for d in 1..=n / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut v = code;
            for _ in 0..d {
                div.push(v % p);
                v /= p;
            }
            div.push(1);
            if poly_rem(p, m, &div).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, k: usize) -> Vec<u32> {
    let count = p.pow(k as u32);
    for code in 0..count {
        let mut m = Vec::with_capacity(k + 1);
        let mut v = code;
        for _ in 0..k {
            m.push(v % p);
            v /= p;
        }
        m.push(1);
        if poly_is_irreducible(p, &m) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
