//! Sparse exact arithmetic in the Clifford algebra on `m` anticommuting
//! generators, every generator squaring to -1.
//!
//! Blades are index sets stored as bitmasks, so up to 64 generators are
//! supported; elements stay sparse maps from blade to rational coefficient.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;

/// A basis blade: the product of the generators in an index set.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(pub u64);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn generator(k: usize) -> Blade {
        assert!(k < 64, "generator index out of range");
        Blade(1 << k)
    }

    /// Builds a blade from distinct indices in any order.
    pub fn from_indices(indices: &[usize]) -> Blade {
        let mut mask = 0u64;
        for &i in indices {
            assert!(i < 64, "generator index out of range");
            assert!(mask & (1 << i) == 0, "repeated index {i} in blade");
            mask |= 1 << i;
        }
        Blade(mask)
    }

    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|k| self.0 >> k & 1 == 1).collect()
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn fits_dim(self, dim: usize) -> bool {
        dim >= 64 || self.0 < (1u64 << dim)
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        for k in self.indices() {
            write!(f, "g{k}")?;
        }
        Ok(())
    }
}

/// Product of two blades: `g_A g_B = sign · g_{A Δ B}`.
///
/// The sign counts the transpositions needed to interleave the two ordered
/// index lists, times (-1) for every repeated generator.
pub fn blade_product(a: Blade, b: Blade) -> (i8, Blade) {
    let mut swaps = 0u32;
    let mut rest = a.0 >> 1;
    while rest != 0 {
        swaps += (rest & b.0).count_ones();
        rest >>= 1;
    }
    let squares = (a.0 & b.0).count_ones();
    let sign = if (swaps + squares).is_multiple_of(2) { 1 } else { -1 };
    (sign, Blade(a.0 ^ b.0))
}

/// Sort key realizing the canonical term order: ascending grade, then
/// lexicographic on the ascending index list.
pub fn blade_order_key(b: Blade) -> (usize, Vec<usize>) {
    (b.grade(), b.indices())
}

/// A sparse element of the Clifford algebra on `dim` generators.
#[derive(Clone, PartialEq, Eq)]
pub struct Multivector {
    dim: usize,
    terms: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= 64, "at most 64 generators supported");
        Multivector { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, value: Rational) -> Self {
        let mut m = Multivector::zero(dim);
        m.add_term(Blade::SCALAR, value);
        m
    }

    pub fn generator(dim: usize, k: usize) -> Self {
        assert!(k < dim, "generator index {k} out of range for dim {dim}");
        let mut m = Multivector::zero(dim);
        m.add_term(Blade::generator(k), Rational::one());
        m
    }

    /// Grade-1 element `Σ coords_k g_k`; the dimension is the length.
    pub fn from_vector(coords: &[Rational]) -> Self {
        let mut m = Multivector::zero(coords.len());
        for (k, c) in coords.iter().enumerate() {
            m.add_term(Blade::generator(k), c.clone());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, blade: Blade) -> Rational {
        self.terms.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.terms.iter()
    }

    /// Terms in the canonical serialization order.
    pub fn sorted_terms(&self) -> Vec<(Blade, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(b, c)| (*b, c)).collect();
        v.sort_by_key(|(b, _)| blade_order_key(*b));
        v
    }

    /// Adds `value` on `blade`, pruning a resulting zero.
    pub fn add_term(&mut self, blade: Blade, value: Rational) {
        assert!(blade.fits_dim(self.dim), "blade does not fit dimension {}", self.dim);
        if value.is_zero() {
            return;
        }
        let entry = self.terms.entry(blade).or_insert_with(Rational::zero);
        *entry += &value;
        if entry.is_zero() {
            self.terms.remove(&blade);
        }
    }

    pub fn add(&self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        for (b, c) in rhs.terms.iter() {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Multivector) -> Multivector {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Multivector {
        let mut out = Multivector::zero(self.dim);
        for (b, c) in self.terms.iter() {
            out.add_term(*b, -c);
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Multivector {
        let mut out = Multivector::zero(self.dim);
        for (b, c) in self.terms.iter() {
            out.add_term(*b, c * k);
        }
        out
    }

    /// Geometric product; panics on dimension mismatch.
    pub fn product(&self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = Multivector::zero(self.dim);
        for (ba, ca) in self.terms.iter() {
            for (bb, cb) in rhs.terms.iter() {
                let (sign, blade) = blade_product(*ba, *bb);
                let mut v = ca * cb;
                if sign < 0 {
                    v = -v;
                }
                out.add_term(blade, v);
            }
        }
        out
    }

    /// Keeps exactly the terms of grade `k`.
    pub fn grade(&self, k: usize) -> Multivector {
        let mut out = Multivector::zero(self.dim);
        for (b, c) in self.terms.iter() {
            if b.grade() == k {
                out.add_term(*b, c.clone());
            }
        }
        out
    }

    pub fn scalar_part(&self) -> Rational {
        self.coeff(Blade::SCALAR)
    }

    /// Reads the element as a grade-1 vector, if it is one.
    pub fn vector_coords(&self) -> Option<Vec<Rational>> {
        if self.terms.keys().any(|b| b.grade() != 1) {
            return None;
        }
        let mut coords = vec![Rational::zero(); self.dim];
        for (b, c) in self.terms.iter() {
            coords[b.indices()[0]] = c.clone();
        }
        Some(coords)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (blade, coeff) in self.sorted_terms() {
            let mag = if coeff.is_negative() { -coeff } else { coeff.clone() };
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if blade == Blade::SCALAR {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{blade:?}")?;
            } else {
                write!(f, "{mag} {blade:?}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a>(Blade, &'a Rational);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("blade", &self.0.indices())?;
                m.serialize_entry("coeff", self.1)?;
                m.end()
            }
        }
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("dim", &self.dim)?;
        let terms: Vec<Term> = self.sorted_terms().into_iter().map(|(b, c)| Term(b, c)).collect();
        struct Seq<'a>(Vec<Term<'a>>);
        impl Serialize for Seq<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for t in &self.0 {
                    seq.serialize_element(t)?;
                }
                seq.end()
            }
        }
        map.serialize_entry("terms", &Seq(terms))?;
        map.end()
    }
}

#[derive(Deserialize)]
struct TermDe {
    blade: Vec<usize>,
    coeff: Rational,
}

#[derive(Deserialize)]
struct MultivectorDe {
    dim: usize,
    terms: Vec<TermDe>,
}

impl<'de> Deserialize<'de> for Multivector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MultivectorDe::deserialize(deserializer)?;
        if raw.dim > 64 {
            return Err(D::Error::custom("at most 64 generators supported"));
        }
        let mut out = Multivector::zero(raw.dim);
        for t in raw.terms {
            let blade = Blade::from_indices(&t.blade);
            if !blade.fits_dim(raw.dim) {
                return Err(D::Error::custom(format!(
                    "blade {:?} does not fit dim {}",
                    t.blade, raw.dim
                )));
            }
            out.add_term(blade, t.coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force sign oracle: concatenate index lists, bubble-sort counting
    /// swaps, then cancel adjacent duplicates with a -1 factor each.
    fn blade_product_oracle(a: Blade, b: Blade) -> (i8, Blade) {
        let mut list: Vec<usize> = a.indices();
        list.extend(b.indices());
        let mut sign = 1i8;
        let mut swapped = true;
        while swapped {
            swapped = false;
            for i in 1..list.len() {
                if list[i - 1] > list[i] {
                    list.swap(i - 1, i);
                    sign = -sign;
                    swapped = true;
                }
            }
        }
        let mut reduced: Vec<usize> = Vec::new();
        for x in list {
            if reduced.last() == Some(&x) {
                reduced.pop();
                sign = -sign; // g_k^2 = -1
            } else {
                reduced.push(x);
            }
        }
        (sign, Blade::from_indices(&reduced))
    }

    #[test]
    fn blade_product_examples() {
        let g = Blade::generator;
        assert_eq!(blade_product(g(0), g(1)), (1, Blade::from_indices(&[0, 1])));
        assert_eq!(blade_product(g(1), g(0)), (-1, Blade::from_indices(&[0, 1])));
        assert_eq!(blade_product(g(3), g(3)), (-1, Blade::SCALAR));
    }

    #[test]
    fn blade_product_matches_oracle_exhaustive_dim5() {
        for a in 0u64..32 {
            for b in 0u64..32 {
                let got = blade_product(Blade(a), Blade(b));
                let want = blade_product_oracle(Blade(a), Blade(b));
                assert_eq!(got, want, "a={a:#b} b={b:#b}");
            }
        }
    }

    #[test]
    fn blade_product_matches_oracle_sparse_dim24() {
        // deterministic pseudo-random masks, no rng needed
        let mut x: u64 = 0x9E3779B97F4A7C15;
        let mask24 = (1u64 << 24) - 1;
        for _ in 0..500 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a = Blade(x & mask24);
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let b = Blade(x & mask24);
            assert_eq!(blade_product(a, b), blade_product_oracle(a, b));
        }
    }

    #[test]
    fn generator_anticommutation() {
        for m in [8usize, 16] {
            for i in 0..m {
                for j in 0..m {
                    let gi = Multivector::generator(m, i);
                    let gj = Multivector::generator(m, j);
                    let s = gi.product(&gj).add(&gj.product(&gi));
                    let expect = if i == j {
                        Multivector::scalar(m, Rational::from(-2))
                    } else {
                        Multivector::zero(m)
                    };
                    assert_eq!(s, expect, "m={m} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn product_example_expansion() {
        // (g0+g1)(g0-g1) = -2 g0 g1
        let m = 8;
        let a = Multivector::generator(m, 0).add(&Multivector::generator(m, 1));
        let b = Multivector::generator(m, 0).sub(&Multivector::generator(m, 1));
        let mut expect = Multivector::zero(m);
        expect.add_term(Blade::from_indices(&[0, 1]), Rational::from(-2));
        assert_eq!(a.product(&b), expect);
    }

    #[test]
    fn unit_and_vector_square() {
        let m = 8;
        let coords: Vec<Rational> = (0..8).map(|k| Rational::from(k as i64 - 3)).collect();
        let x = Multivector::from_vector(&coords);
        let one = Multivector::scalar(m, Rational::one());
        assert_eq!(x.product(&one), x);
        assert_eq!(one.product(&x), x);
        // X² = -|X|²
        let norm: Rational = coords.iter().map(|c| c.square()).sum();
        assert_eq!(x.product(&x), Multivector::scalar(m, -norm));
    }

    #[test]
    fn grade_extraction() {
        let m = 8;
        let mut u = Multivector::zero(m);
        u.add_term(Blade::from_indices(&[0, 1]), Rational::one());
        u.add_term(Blade::generator(2), Rational::one());
        assert_eq!(u.grade(1), Multivector::generator(m, 2));
        let s = Multivector::scalar(m, Rational::from(5));
        assert_eq!(s.grade(0), s);
        // grades partition the element
        let mut back = Multivector::zero(m);
        for k in 0..=m {
            back = back.add(&u.grade(k));
        }
        assert_eq!(back, u);
    }

    #[test]
    fn zero_vector_is_empty() {
        let z = Multivector::from_vector(&vec![Rational::zero(); 8]);
        assert!(z.is_zero());
        assert_eq!(z.term_count(), 0);
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn dim_mismatch_panics() {
        let a = Multivector::generator(8, 0);
        let b = Multivector::generator(16, 0);
        let _ = a.product(&b);
    }

    #[test]
    fn serialization_order_and_round_trip() {
        let mut u = Multivector::zero(8);
        u.add_term(Blade::from_indices(&[1, 2]), Rational::one());
        u.add_term(Blade::from_indices(&[0, 3]), Rational::from(2));
        u.add_term(Blade::generator(5), Rational::from(-1));
        let js = serde_json::to_string(&u).unwrap();
        // grade 1 before grade 2; [0,3] lexicographically before [1,2]
        assert_eq!(
            js,
            r#"{"dim":8,"terms":[{"blade":[5],"coeff":"-1"},{"blade":[0,3],"coeff":"2"},{"blade":[1,2],"coeff":"1"}]}"#
        );
        let back: Multivector = serde_json::from_str(&js).unwrap();
        assert_eq!(back, u);
    }
}
