//! Exact arithmetic in the cyclotomic field Q(ζ_n).
//!
//! Elements are dense coordinate vectors in the power basis
//! `1, ζ, …, ζ^{φ(n)-1}`, i.e. polynomials reduced modulo the `n`-th
//! cyclotomic polynomial Φ_n. That reduction is canonical, so two elements
//! are equal iff their coordinate vectors are identical.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{ArithError, Rat};

/// The field Q(ζ_n) together with its reduction tables.
#[derive(Debug, PartialEq, Eq)]
pub struct CycField {
    conductor: u32,
    phi: usize,
    /// Φ_n, lowest coefficient first, monic.
    modulus: Vec<i64>,
    /// `powers[k]` = coordinates of ζ^k, for `k < max(n, 2φ-1)`.
    powers: Vec<Vec<i64>>,
}

pub fn euler_phi(n: u32) -> u32 {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

impl CycField {
    pub fn new(conductor: u32) -> Arc<CycField> {
        assert!(conductor >= 1, "conductor must be positive");
        let modulus = cyclotomic_polynomial(conductor);
        let phi = modulus.len() - 1;
        let span = (conductor as usize).max(2 * phi).max(1);
        let mut powers: Vec<Vec<i64>> = Vec::with_capacity(span);
        let mut cur = vec![0i64; phi];
        if phi > 0 {
            cur[0] = 1;
        }
        for _ in 0..span {
            powers.push(cur.clone());
            // multiply by ζ: shift, then fold the top coefficient via Φ_n
            let top = cur[phi - 1];
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..phi {
                    cur[j] -= top * modulus[j];
                }
            }
        }
        Arc::new(CycField {
            conductor,
            phi,
            modulus,
            powers,
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Degree φ(n) of the field over Q.
    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// Coordinates of ζ^k; `k` is taken modulo n.
    pub fn power_coords(&self, k: u64) -> &[i64] {
        &self.powers[(k % self.conductor as u64) as usize]
    }

    /// Folds a raw coefficient vector (any length) into canonical coordinates.
    pub(crate) fn fold_into(&self, raw: &[Rat], out: &mut [Rat]) {
        debug_assert_eq!(out.len(), self.phi);
        let n = self.conductor as usize;
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.phi {
                out[k] += c;
                continue;
            }
            let row = if k < self.powers.len() {
                &self.powers[k]
            } else {
                &self.powers[k % n]
            };
            for (o, &w) in out.iter_mut().zip(row) {
                if w != 0 {
                    *o += &(c * &Rat::int(w));
                }
            }
        }
    }

    /// Integer version of [`fold_into`](Self::fold_into); `None` on overflow.
    pub(crate) fn fold_i128(&self, raw: &[i128], out: &mut [i128]) -> Option<()> {
        let n = self.conductor as usize;
        for (k, &c) in raw.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if k < self.phi {
                out[k] = out[k].checked_add(c)?;
                continue;
            }
            let row = if k < self.powers.len() {
                &self.powers[k]
            } else {
                &self.powers[k % n]
            };
            for (o, &w) in out.iter_mut().zip(row) {
                if w != 0 {
                    *o = o.checked_add(c.checked_mul(w as i128)?)?;
                }
            }
        }
        Some(())
    }

    /// Product of two integer coordinate vectors, folded into `out`; `None` on overflow.
    pub(crate) fn mul_i128(&self, a: &[i128], b: &[i128], out: &mut [i128]) -> Option<()> {
        let mut raw = vec![0i128; (2 * self.phi).saturating_sub(1).max(1)];
        for (s, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (t, &y) in b.iter().enumerate() {
                if y != 0 {
                    raw[s + t] = raw[s + t].checked_add(x.checked_mul(y)?)?;
                }
            }
        }
        out.iter_mut().for_each(|o| *o = 0);
        self.fold_i128(&raw, out)
    }

    pub fn zero(self: &Arc<Self>) -> CycNum {
        CycNum {
            field: Arc::clone(self),
            coeffs: vec![Rat::ZERO; self.phi],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycNum {
        self.rational(Rat::ONE)
    }

    pub fn rational(self: &Arc<Self>, r: Rat) -> CycNum {
        let mut z = self.zero();
        z.coeffs[0] = r;
        z
    }

    pub fn int(self: &Arc<Self>, n: i64) -> CycNum {
        self.rational(Rat::int(n))
    }

    /// ζ_n^k.
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> CycNum {
        let n = self.conductor as i64;
        let k = k.rem_euclid(n) as u64;
        CycNum {
            field: Arc::clone(self),
            coeffs: self.power_coords(k).iter().map(|&c| Rat::int(c)).collect(),
        }
    }

    /// Canonical representative of `Σ raw[k]·ζ^k`.
    pub fn reduce(self: &Arc<Self>, raw: &[Rat]) -> CycNum {
        let mut coeffs = vec![Rat::ZERO; self.phi];
        self.fold_into(raw, &mut coeffs);
        CycNum {
            field: Arc::clone(self),
            coeffs,
        }
    }

    /// Builds an element from coordinates that are already canonical.
    pub fn from_coords(self: &Arc<Self>, coeffs: Vec<Rat>) -> CycNum {
        assert_eq!(coeffs.len(), self.phi, "coordinate vector has wrong length");
        CycNum {
            field: Arc::clone(self),
            coeffs,
        }
    }

    /// Gauss sum `Σ_{x ∈ F_p} ζ_p^{x²}` for an odd prime `p` dividing the conductor.
    pub fn gauss_sum(self: &Arc<Self>, p: u32) -> Result<CycNum, ArithError> {
        if p < 3 || !is_prime(p) {
            return Err(ArithError::NotOddPrime(p));
        }
        if !self.conductor.is_multiple_of(p) {
            return Err(ArithError::ConductorMismatch {
                expected: p,
                found: self.conductor,
            });
        }
        let step = (self.conductor / p) as u64;
        let mut raw = vec![Rat::ZERO; self.conductor as usize];
        for x in 0..p as u64 {
            let k = (x * x % p as u64) * step;
            raw[k as usize] += &Rat::ONE;
        }
        Ok(self.reduce(&raw))
    }
}

/// An element of Q(ζ_n).
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycField>,
    coeffs: Vec<Rat>,
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for CycNum {}

impl core::hash::Hash for CycNum {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.field.conductor.hash(state);
        self.coeffs.hash(state);
    }
}

impl CycNum {
    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rat::is_zero)
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rat> {
        self.coeffs[1..]
            .iter()
            .all(Rat::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check_same(&self, other: &CycNum) {
        assert_eq!(
            self.field.conductor, other.field.conductor,
            "mixed-conductor arithmetic"
        );
    }

    /// Image under ζ ↦ ζ^k for `k` coprime to the conductor.
    pub fn galois(&self, k: u32) -> CycNum {
        let n = self.field.conductor as u64;
        let mut raw = vec![Rat::ZERO; n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[(j as u64 * k as u64 % n) as usize] += c;
        }
        self.field.reduce(&raw)
    }

    /// Complex conjugate: ζ ↦ ζ^{n-1}.
    pub fn conj(&self) -> CycNum {
        self.galois(self.field.conductor - 1)
    }

    pub fn scale(&self, r: &Rat) -> CycNum {
        CycNum {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> CycNum {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm in Q[x] mod Φ_n.
    pub fn inv(&self) -> Result<CycNum, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let modulus: Vec<Rat> = self.field.modulus.iter().map(|&c| Rat::int(c)).collect();
        let mut r0 = modulus;
        let mut r1 = trimmed(self.coeffs.clone());
        let mut t0: Vec<Rat> = Vec::new();
        let mut t1: Vec<Rat> = vec![Rat::ONE];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = core::mem::replace(&mut r1, r);
            t0 = core::mem::replace(&mut t1, t2);
        }
        // r0 is a nonzero constant because Φ_n is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip().ok_or(ArithError::DivisionByZero)?;
        let scaled: Vec<Rat> = t0.iter().map(|x| x * &c).collect();
        Ok(self.field.reduce(&scaled))
    }

    /// Moves the element into Q(ζ_N) for a multiple N of the conductor.
    pub fn embed(&self, target: &Arc<CycField>) -> Result<CycNum, ArithError> {
        let n = self.field.conductor;
        if !target.conductor.is_multiple_of(n) {
            return Err(ArithError::ConductorMismatch {
                expected: n,
                found: target.conductor,
            });
        }
        let step = (target.conductor / n) as usize;
        let mut raw = vec![Rat::ZERO; step * self.coeffs.len().max(1)];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[j * step] = c.clone();
        }
        Ok(target.reduce(&raw))
    }

    /// `"a0 + a1*z + ... (z = zeta_n)"`.
    pub fn render(&self) -> String {
        alloc::format!("{} (z = zeta_{})", self, self.field.conductor)
    }
}

fn trimmed(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().is_some_and(Rat::is_zero) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or(Rat::ZERO);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trimmed(out)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    trimmed(out)
}

fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut rem = trimmed(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].recip().expect("nonzero leading coefficient");
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rat::ZERO; rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                rem[k + j] -= &(&c * bj);
            }
        }
        quot[k] = c;
        rem = trimmed(rem);
    }
    (trimmed(quot), rem)
}

impl Add<&CycNum> for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        self.check_same(rhs);
        CycNum {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&CycNum> for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self.check_same(rhs);
        CycNum {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<&CycNum> for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        self.check_same(rhs);
        let phi = self.field.phi;
        let mut raw = vec![Rat::ZERO; (2 * phi).saturating_sub(1).max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += &(a * b);
                }
            }
        }
        self.field.reduce(&raw)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
        impl $tr<CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                self.$method(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @{}", self, self.field.conductor)
    }
}
