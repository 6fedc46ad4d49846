//! Small finite fields: prime fields F_p and F₈ = F₂[t]/(t³+t+1).
//!
//! Field elements are stored as `u8` residues. For F_p this is the integer
//! residue; for F₈ it is the coefficient bit vector of a polynomial in `t`
//! of degree < 3 (bit `i` is the coefficient of `t^i`).

use alloc::string::String;
use core::fmt;

use crate::arith::is_prime;

/// t³ + t + 1 as a bit vector.
const F8_MODULUS: u8 = 0b1011;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteField {
    p: u8,
    degree: u8,
    /// Bit vector of the defining polynomial for degree > 1, zero otherwise.
    modulus: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("operands belong to different fields ({0} vs {1})")]
    FieldMismatch(FiniteField, FiniteField),
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("unsupported field: {0}")]
    Unsupported(&'static str),
}

impl FiniteField {
    /// The prime field F_p, for odd or even primes below 256.
    pub fn prime(p: u32) -> Result<FiniteField, FieldError> {
        if !is_prime(p) || p > 255 {
            return Err(FieldError::Unsupported("prime fields need a prime p < 256"));
        }
        Ok(FiniteField {
            p: p as u8,
            degree: 1,
            modulus: 0,
        })
    }

    pub const fn f8() -> FiniteField {
        FiniteField {
            p: 2,
            degree: 3,
            modulus: F8_MODULUS,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p as u32
    }

    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    pub fn order(&self) -> u32 {
        (self.p as u32).pow(self.degree as u32)
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.order() as u8
    }

    pub fn elem(&self, value: u8) -> FqElem {
        assert!((value as u32) < self.order(), "value out of range");
        FqElem { field: *self, value }
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        if self.degree == 1 {
            ((a as u16 + b as u16) % self.p as u16) as u8
        } else {
            a ^ b
        }
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        if self.degree == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            a
        }
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        if self.degree == 1 {
            ((a as u16 * b as u16) % self.p as u16) as u8
        } else {
            // carry-less product, then reduce by the modulus
            let mut r: u16 = 0;
            for i in 0..self.degree {
                if b >> i & 1 == 1 {
                    r ^= (a as u16) << i;
                }
            }
            let d = self.degree as u16;
            for i in (d..2 * d - 1).rev() {
                if r >> i & 1 == 1 {
                    r ^= (self.modulus as u16) << (i - d);
                }
            }
            r as u8
        }
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.pow(a, self.order() as u64 - 2))
    }

    /// Quadratic residue symbol of `a` in an odd prime field.
    pub fn legendre(&self, a: u8) -> i8 {
        assert!(
            self.degree == 1 && self.p > 2,
            "legendre symbol needs an odd prime field"
        );
        if a == 0 {
            0
        } else if self.pow(a, (self.p as u64 - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u8 {
        let q = self.order() as u64;
        (1..q as u8)
            .find(|&g| (1..q - 1).all(|k| self.pow(g, k) != 1))
            .expect("finite field has a primitive element")
    }

    /// Digit used in compact matrix encodings (`0-9a-z`).
    pub fn digit(&self, a: u8) -> char {
        char::from_digit(a as u32, 36).expect("element fits a base-36 digit")
    }

    pub fn from_digit(&self, c: char) -> Option<u8> {
        c.to_digit(36)
            .filter(|&d| d < self.order())
            .map(|d| d as u8)
    }

    /// Text form of an element: an integer for prime fields, a polynomial in `t` for F₈.
    pub fn render(&self, a: u8) -> String {
        if self.degree == 1 {
            return alloc::format!("{a}");
        }
        if a == 0 {
            return String::from("0");
        }
        let mut terms = alloc::vec::Vec::new();
        for i in (0..self.degree).rev() {
            if a >> i & 1 == 1 {
                terms.push(match i {
                    0 => String::from("1"),
                    1 => String::from("t"),
                    _ => alloc::format!("t^{i}"),
                });
            }
        }
        terms.join("+")
    }

    pub fn parse(&self, s: &str) -> Option<u8> {
        if self.degree == 1 {
            return s.trim().parse::<u8>().ok().filter(|&v| v < self.p);
        }
        let s = s.trim();
        if s == "0" {
            return Some(0);
        }
        let mut v = 0u8;
        for term in s.split('+') {
            let bit = match term.trim() {
                "1" => 0,
                "t" => 1,
                t => t.strip_prefix("t^")?.parse::<u8>().ok()?,
            };
            if bit >= self.degree || v >> bit & 1 == 1 {
                return None;
            }
            v |= 1 << bit;
        }
        Some(v)
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.order())
    }
}

/// A field element that carries its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FqElem {
    field: FiniteField,
    value: u8,
}

impl FqElem {
    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn value(&self) -> u8 {
        self.value
    }

    fn same_field(&self, other: &FqElem) -> Result<FiniteField, FieldError> {
        if self.field == other.field {
            Ok(self.field)
        } else {
            Err(FieldError::FieldMismatch(self.field, other.field))
        }
    }

    pub fn add(&self, other: &FqElem) -> Result<FqElem, FieldError> {
        let f = self.same_field(other)?;
        Ok(f.elem(f.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FqElem) -> Result<FqElem, FieldError> {
        let f = self.same_field(other)?;
        Ok(f.elem(f.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FqElem) -> Result<FqElem, FieldError> {
        let f = self.same_field(other)?;
        Ok(f.elem(f.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<FqElem, FieldError> {
        self.field
            .inv(self.value)
            .map(|v| self.field.elem(v))
            .ok_or(FieldError::InverseOfZero)
    }

    pub fn pow(&self, e: u64) -> FqElem {
        self.field.elem(self.field.pow(self.value, e))
    }

    pub fn legendre(&self) -> i8 {
        self.field.legendre(self.value)
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.render(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn f8_cube_of_t() {
        let f = FiniteField::f8();
        let t = f.elem(0b010);
        let t3 = t.mul(&t).unwrap().mul(&t).unwrap();
        assert_eq!(t3.to_string(), "t+1");
        assert_eq!(f.parse("t^2+t+1"), Some(0b111));
        assert_eq!(f.render(0b101), "t^2+1");
    }

    #[test]
    fn prime_field_examples() {
        let f11 = FiniteField::prime(11).unwrap();
        assert_eq!(f11.elem(2).inv().unwrap().value(), 6);
        let f3 = FiniteField::prime(3).unwrap();
        assert_eq!(f3.elem(2).add(&f3.elem(2)).unwrap().value(), 1);
        assert_eq!(f11.elem(0).inv(), Err(FieldError::InverseOfZero));
        assert!(matches!(
            f3.elem(1).add(&f11.elem(1)),
            Err(FieldError::FieldMismatch(..))
        ));
        assert!(FiniteField::prime(9).is_err());
    }

    #[test]
    fn legendre_values() {
        let f3 = FiniteField::prime(3).unwrap();
        assert_eq!(f3.legendre(1), 1);
        assert_eq!(f3.legendre(2), -1);
        let f11 = FiniteField::prime(11).unwrap();
        assert_eq!(f11.legendre(0), 0);
    }

    #[test]
    fn legendre_is_multiplicative() {
        for p in [3u32, 11] {
            let f = FiniteField::prime(p).unwrap();
            for a in 1..p as u8 {
                for b in 1..p as u8 {
                    assert_eq!(f.legendre(f.mul(a, b)), f.legendre(a) * f.legendre(b));
                }
            }
        }
    }

    #[test]
    fn f8_structure() {
        let f = FiniteField::f8();
        let t = 0b010;
        let powers: alloc::collections::BTreeSet<u8> = (0..7).map(|k| f.pow(t, k)).collect();
        assert_eq!(powers.len(), 7);
        assert_eq!(f.pow(t, 7), 1);
        for a in f.elements() {
            assert_eq!(f.add(a, a), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
        assert_eq!(f.primitive_element(), 0b010);
    }
}
