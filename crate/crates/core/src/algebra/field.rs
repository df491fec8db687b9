//! Prime-power fields GF(p^e) in a polynomial basis.
//!
//! Elements are addressed by their base-`p` index: the polynomial
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` has index `sum c_i p^i`. Index 0 is
//! the zero element and index 1 the identity. Multiplication goes through
//! log/antilog tables for fields with at most 2^16 elements and falls back to
//! reduction modulo the defining polynomial otherwise.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order accepted.
pub const MAX_ORDER: u64 = 1 << 20;

const TABLE_ORDER: u32 = 1 << 16;
const ADD_TABLE_ORDER: u32 = 256;

/// A finite field GF(p^e) with an explicit monic irreducible modulus.
pub struct Field {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `p^i` for `i in 0..e`.
    powers: Vec<u32>,
    logs: Option<LogTables>,
    add_table: Option<Vec<u32>>,
}

struct LogTables {
    // exp has length 2(q-1) so products of two logs index without reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// GF(p^e) using the lexicographically smallest monic irreducible modulus.
    pub fn new(p: u32, e: u32) -> Result<Arc<Field>> {
        Self::with_modulus(p, e, None)
    }

    /// Prime field GF(p).
    pub fn prime(p: u32) -> Result<Arc<Field>> {
        Self::new(p, 1)
    }

    /// GF(p^e) with an explicit modulus (`e + 1` little-endian coefficients,
    /// monic). `None` selects the default modulus.
    pub fn with_modulus(p: u32, e: u32, modulus: Option<Vec<u32>>) -> Result<Arc<Field>> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidField("extension degree must be >= 1".into()));
        }
        let order = (p as u64).checked_pow(e).filter(|&q| q <= MAX_ORDER);
        let Some(order) = order else {
            return Err(Error::InvalidField(format!(
                "{p}^{e} exceeds the supported order {MAX_ORDER}"
            )));
        };
        let modulus = match modulus {
            Some(m) => {
                if m.len() != e as usize + 1 || m[e as usize] != 1 {
                    return Err(Error::InvalidField(format!(
                        "modulus must be monic of degree {e}"
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidField(format!(
                        "modulus coefficients must lie in 0..{p}"
                    )));
                }
                if !poly::is_irreducible(&m, p) {
                    return Err(Error::InvalidField(format!("modulus {m:?} is reducible")));
                }
                m
            }
            None => poly::smallest_irreducible(p, e),
        };
        let q = order as u32;
        let powers = (0..e).map(|i| p.pow(i)).collect();
        let mut field = Field {
            p,
            e,
            q,
            modulus,
            powers,
            logs: None,
            add_table: None,
        };
        if q <= ADD_TABLE_ORDER {
            let mut table = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = field.add_digits(a, b);
                }
            }
            field.add_table = Some(table);
        }
        if q <= TABLE_ORDER {
            field.logs = Some(field.build_log_tables());
        }
        Ok(Arc::new(field))
    }

    fn build_log_tables(&self) -> LogTables {
        let q = self.q;
        let order = q - 1;
        let generator = (1..q)
            .find(|&g| self.multiplicative_order_slow(g) == order)
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..order {
            exp[i as usize] = x;
            exp[(i + order) as usize] = x;
            log[x as usize] = i;
            x = self.mul_poly(x, generator);
        }
        LogTables { exp, log }
    }

    fn multiplicative_order_slow(&self, g: u32) -> u32 {
        let mut x = g;
        let mut k = 1;
        while x != 1 {
            x = self.mul_poly(x, g);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Number of elements `q = p^e`.
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    pub fn nonzero_elements(&self) -> std::ops::Range<u32> {
        1..self.q
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.q
    }

    /// Little-endian coefficients of the polynomial representing `a`.
    pub fn coeffs(&self, a: u32) -> Vec<u32> {
        let mut x = a;
        (0..self.e)
            .map(|_| {
                let c = x % self.p;
                x /= self.p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> u32 {
        coeffs
            .iter()
            .zip(&self.powers)
            .map(|(&c, &pw)| (c % self.p) * pw)
            .sum()
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &pw in &self.powers {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * pw;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn neg_digits(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        for &pw in &self.powers {
            let d = a % self.p;
            out += ((self.p - d) % self.p) * pw;
            a /= self.p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.add_table {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.add_digits(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg_digits(a)
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.logs {
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
            None => self.mul_poly(a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        match &self.logs {
            Some(t) => {
                let l = t.log[a as usize];
                Some(t.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
            }
            None => Some(self.pow(a, (self.q - 2) as u64)),
        }
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }

    /// `a^k` by square-and-multiply.
    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a^{p^s}` for `1 <= s <= e`.
    pub fn frobenius(&self, a: u32, s: u32) -> Result<u32> {
        self.check_exponent(s)?;
        Ok(self.frob(a, s))
    }

    pub fn check_exponent(&self, s: u32) -> Result<()> {
        if s == 0 || s > self.e {
            return Err(Error::InvalidExponent { s, e: self.e });
        }
        Ok(())
    }

    /// Unchecked Frobenius; `s` is reduced mod `e`.
    #[inline]
    pub(crate) fn frob(&self, a: u32, s: u32) -> u32 {
        let s = s % self.e;
        if s == 0 || a == 0 {
            return a;
        }
        let k = (self.p as u64).pow(s);
        match &self.logs {
            Some(t) => {
                let l = t.log[a as usize] as u64;
                t.exp[((l * k) % (self.q as u64 - 1)) as usize]
            }
            None => self.pow(a, k),
        }
    }

    fn mul_poly(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let e = self.e as usize;
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // modulus is monic: x^e = -sum m_i x^i
        for deg in (e..prod.len()).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &m) in self.modulus[..e].iter().enumerate() {
                let t = lead * m as u64 % p;
                let idx = deg - e + i;
                prod[idx] = (prod[idx] + p - t) % p;
            }
        }
        prod[..e]
            .iter()
            .zip(&self.powers)
            .map(|(&c, &pw)| c as u32 * pw)
            .sum()
    }
}

/// Polynomials over GF(p) as little-endian coefficient vectors.
pub(crate) mod poly {
    fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        // p is prime, a != 0
        let mut acc = 1u64;
        let mut base = a as u64;
        let mut k = p as u64 - 2;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            k >>= 1;
        }
        acc as u32
    }

    /// Remainder of `a` modulo nonzero `b`.
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p) as u64;
        while r.len() > db {
            let dr = r.len() - 1;
            let factor = r[dr] as u64 * lead_inv % p as u64;
            let shift = dr - db;
            for (i, &c) in b.iter().enumerate() {
                let t = factor * c as u64 % p as u64;
                r[shift + i] = ((r[shift + i] as u64 + p as u64 - t) % p as u64) as u32;
            }
            r = trim(r);
        }
        r
    }

    /// Monic polynomial of degree `deg` whose lower coefficients are the
    /// base-`p` digits of `idx`.
    pub fn monic_from_index(idx: u64, deg: u32, p: u32) -> Vec<u32> {
        let mut x = idx;
        let mut out: Vec<u32> = (0..deg)
            .map(|_| {
                let c = (x % p as u64) as u32;
                x /= p as u64;
                c
            })
            .collect();
        out.push(1);
        out
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = (f.len() - 1) as u32;
        if deg <= 1 {
            return deg == 1;
        }
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d);
            for idx in 0..count {
                let g = monic_from_index(idx, d, p);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
        let count = (p as u64).pow(e);
        (0..count)
            .map(|idx| monic_from_index(idx, e, p))
            .find(|f| is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree")
    }
}

/// An element bundled with its field, for checked arithmetic across values
/// whose provenance is not statically known.
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: Arc<Field>,
    idx: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn new(field: &Arc<Field>, idx: u32) -> Result<Self> {
        if !field.contains(idx) {
            return Err(Error::InvalidField(format!(
                "element index {idx} outside 0..{}",
                field.order()
            )));
        }
        Ok(FieldElement {
            field: Arc::clone(field),
            idx,
        })
    }

    pub fn index(&self) -> u32 {
        self.idx
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.idx)
    }

    pub fn arith(&self, other: &FieldElement, op: ArithOp) -> Result<FieldElement> {
        if *self.field != *other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let idx = match op {
            ArithOp::Add => f.add(self.idx, other.idx),
            ArithOp::Sub => f.sub(self.idx, other.idx),
            ArithOp::Mul => f.mul(self.idx, other.idx),
            ArithOp::Div => f.div(self.idx, other.idx)?,
        };
        Ok(FieldElement {
            field: Arc::clone(f),
            idx,
        })
    }

    pub fn frobenius(&self, s: u32) -> Result<FieldElement> {
        let idx = self.field.frobenius(self.idx, s)?;
        Ok(FieldElement {
            field: Arc::clone(&self.field),
            idx,
        })
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.idx == other.idx && *self.field == *other.field
    }
}

impl Eq for FieldElement {}
