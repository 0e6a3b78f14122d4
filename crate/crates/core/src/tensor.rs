//! The tensor algebras: multivectors with octonion coefficients, and the
//! block variant with one octonion per slot.
//!
//! The product is factorwise, `(a⊗u)(b⊗v) = (ab)⊗(uv)`; associativity is
//! inherited from the coefficients, so it fails in general and holds on the
//! real-coefficient subalgebra.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::clifford::{blade_order_key, blade_product, Blade, Multivector};
use crate::error::{Error, Result};
use crate::octonion::Octonion;
use crate::rational::Rational;

/// Coefficient algebra for a tensor element.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, k: &Rational) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
}

impl Coefficient for Octonion {
    fn is_zero(&self) -> bool {
        Octonion::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, k: &Rational) -> Self {
        Octonion::scale(self, k)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// An element of 𝕆ⁿ: one octonion per slot, multiplied slotwise.
#[derive(Clone, PartialEq)]
pub struct MultiOctonion {
    slots: Vec<Octonion>,
}

impl MultiOctonion {
    pub fn zero(n: usize) -> Self {
        MultiOctonion { slots: vec![Octonion::zero(); n] }
    }

    /// The slotwise unit `(e_0, .., e_0)`.
    pub fn unit(n: usize) -> Self {
        MultiOctonion { slots: vec![Octonion::one(); n] }
    }

    /// `e_i` placed in slot `k`, zero elsewhere.
    pub fn basis(n: usize, k: usize, i: usize) -> Self {
        assert!(k < n, "slot index out of range");
        let mut m = MultiOctonion::zero(n);
        m.slots[k] = Octonion::basis(i);
        m
    }

    pub fn from_slots(slots: Vec<Octonion>) -> Self {
        MultiOctonion { slots }
    }

    /// A single octonion placed in slot `k`.
    pub fn embed(n: usize, k: usize, o: Octonion) -> Self {
        assert!(k < n, "slot index out of range");
        let mut m = MultiOctonion::zero(n);
        m.slots[k] = o;
        m
    }

    pub fn n(&self) -> usize {
        self.slots.len()
    }

    pub fn slot(&self, k: usize) -> &Octonion {
        &self.slots[k]
    }

    pub fn slots(&self) -> &[Octonion] {
        &self.slots
    }

    pub fn conj(&self) -> Self {
        MultiOctonion { slots: self.slots.iter().map(Octonion::conj).collect() }
    }
}

impl Coefficient for MultiOctonion {
    fn is_zero(&self) -> bool {
        self.slots.iter().all(Octonion::is_zero)
    }
    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n(), rhs.n(), "slot count mismatch");
        MultiOctonion {
            slots: self.slots.iter().zip(&rhs.slots).map(|(a, b)| a + b).collect(),
        }
    }
    fn neg(&self) -> Self {
        MultiOctonion { slots: self.slots.iter().map(|a| -a).collect() }
    }
    fn scale(&self, k: &Rational) -> Self {
        MultiOctonion { slots: self.slots.iter().map(|a| a.scale(k)).collect() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n(), rhs.n(), "slot count mismatch");
        MultiOctonion {
            slots: self.slots.iter().zip(&rhs.slots).map(|(a, b)| a * b).collect(),
        }
    }
}

impl fmt::Debug for MultiOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MultiOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, o) in self.slots.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{o}")?;
        }
        write!(f, ")")
    }
}

/// Sparse map from blades to coefficients in some algebra `C`.
#[derive(Clone, PartialEq)]
pub struct Tensor<C: Coefficient> {
    dim: usize,
    terms: BTreeMap<Blade, C>,
}

pub type TensorElement = Tensor<Octonion>;

impl<C: Coefficient> Tensor<C> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= 64, "at most 64 generators supported");
        Tensor { dim, terms: BTreeMap::new() }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &C)> {
        self.terms.iter()
    }

    pub fn sorted_terms(&self) -> Vec<(Blade, &C)> {
        let mut v: Vec<_> = self.terms.iter().map(|(b, c)| (*b, c)).collect();
        v.sort_by_key(|(b, _)| blade_order_key(*b));
        v
    }

    pub fn coeff(&self, blade: Blade) -> Option<&C> {
        self.terms.get(&blade)
    }

    pub fn add_term(&mut self, blade: Blade, value: C) {
        assert!(blade.fits_dim(self.dim), "blade does not fit dimension {}", self.dim);
        if value.is_zero() {
            return;
        }
        match self.terms.get_mut(&blade) {
            Some(c) => {
                let s = c.add(&value);
                if s.is_zero() {
                    self.terms.remove(&blade);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(blade, value);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        for (b, c) in rhs.terms.iter() {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(k))
    }

    /// Rebuilds the element with every coefficient transformed; prunes zeros.
    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = Tensor::zero(self.dim);
        for (b, c) in self.terms.iter() {
            out.add_term(*b, f(c));
        }
        out
    }

    /// Factorwise product; panics on dimension mismatch.
    pub fn product(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = Tensor::zero(self.dim);
        for (ba, ca) in self.terms.iter() {
            for (bb, cb) in rhs.terms.iter() {
                let (sign, blade) = blade_product(*ba, *bb);
                let mut v = ca.mul(cb);
                if sign < 0 {
                    v = v.neg();
                }
                out.add_term(blade, v);
            }
        }
        out
    }
}

impl TensorElement {
    /// `Σ coords_k · e_0⊗g_k`: a real vector inside the tensor algebra.
    pub fn embed_vector(coords: &[Rational]) -> Self {
        let mut out = Tensor::zero(coords.len());
        for (k, c) in coords.iter().enumerate() {
            out.add_term(Blade::generator(k), Octonion::from_real(c.clone()));
        }
        out
    }

    /// A pure octonion on the scalar blade.
    pub fn from_octonion(dim: usize, o: Octonion) -> Self {
        let mut out = Tensor::zero(dim);
        out.add_term(Blade::SCALAR, o);
        out
    }

    /// Lifts a real multivector, `u ↦ e_0⊗u`.
    pub fn from_multivector(u: &Multivector) -> Self {
        let mut out = Tensor::zero(u.dim());
        for (b, c) in u.terms() {
            out.add_term(*b, Octonion::from_real(c.clone()));
        }
        out
    }

    /// Left multiplication of every coefficient by a fixed octonion.
    pub fn left_mul_oct(&self, a: &Octonion) -> Self {
        self.map_coeffs(|c| a * c)
    }

    /// Reads the element back as `e_0⊗u`; errors when any coefficient has an
    /// imaginary part.
    pub fn as_multivector(&self) -> Result<Multivector> {
        let mut out = Multivector::zero(self.dim);
        for (b, c) in self.terms.iter() {
            if !c.is_real() {
                return Err(Error::NotRealVector(format!("{self}")));
            }
            out.add_term(*b, c.real_part().clone());
        }
        Ok(out)
    }

    /// Direct read of the coefficient along octonion basis slot `i`:
    /// for `p = Σ e_i p_i` this returns `p_i`.
    pub fn octonion_component(&self, i: usize) -> Multivector {
        let mut out = Multivector::zero(self.dim);
        for (b, c) in self.terms.iter() {
            out.add_term(*b, c.coeff(i).clone());
        }
        out
    }
}

/// Element of 𝕆ⁿ⊗Cl_{8n}: blades keyed to slot-tuples of octonions.
#[derive(Clone, PartialEq)]
pub struct MultiTensorElement {
    n: usize,
    tensor: Tensor<MultiOctonion>,
}

impl MultiTensorElement {
    pub fn zero(n: usize) -> Self {
        MultiTensorElement { n, tensor: Tensor::zero(8 * n) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }

    pub fn term_count(&self) -> usize {
        self.tensor.term_count()
    }

    pub fn coeff(&self, blade: Blade) -> Option<&MultiOctonion> {
        self.tensor.coeff(blade)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &MultiOctonion)> {
        self.tensor.terms()
    }

    pub fn sorted_terms(&self) -> Vec<(Blade, &MultiOctonion)> {
        self.tensor.sorted_terms()
    }

    pub fn add_term(&mut self, blade: Blade, value: MultiOctonion) {
        assert_eq!(value.n(), self.n, "slot count mismatch");
        self.tensor.add_term(blade, value);
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "slot count mismatch");
        MultiTensorElement { n: self.n, tensor: self.tensor.add(&rhs.tensor) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "slot count mismatch");
        MultiTensorElement { n: self.n, tensor: self.tensor.sub(&rhs.tensor) }
    }

    pub fn neg(&self) -> Self {
        MultiTensorElement { n: self.n, tensor: self.tensor.neg() }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        MultiTensorElement { n: self.n, tensor: self.tensor.scale(k) }
    }

    pub fn map_coeffs(&self, f: impl Fn(&MultiOctonion) -> MultiOctonion) -> Self {
        MultiTensorElement { n: self.n, tensor: self.tensor.map_coeffs(f) }
    }

    pub fn product(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "slot count mismatch");
        MultiTensorElement { n: self.n, tensor: self.tensor.product(&rhs.tensor) }
    }

    /// Slot-matched embedding of coordinates: coordinate `8j+i` lands on
    /// `e_0` in slot `j` times `g_{8j+i}`. This is the embedding under which
    /// the block Witt decomposition reconstructs the vector.
    pub fn embed_vector(coords: &[Rational], n: usize) -> Result<Self> {
        if coords.len() != 8 * n {
            return Err(Error::CoordinateLength { expected: 8 * n, got: coords.len() });
        }
        let mut out = MultiTensorElement::zero(n);
        for (m, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let slot = m / 8;
            out.add_term(
                Blade::generator(m),
                MultiOctonion::embed(n, slot, Octonion::from_real(c.clone())),
            );
        }
        Ok(out)
    }

    /// A pure slot-tuple on the scalar blade.
    pub fn from_multi_octonion(n: usize, o: MultiOctonion) -> Self {
        assert_eq!(o.n(), n, "slot count mismatch");
        let mut out = MultiTensorElement::zero(n);
        out.add_term(Blade::SCALAR, o);
        out
    }

    /// Left multiplication of every coefficient by a fixed slot-tuple.
    pub fn left_mul(&self, a: &MultiOctonion) -> Self {
        assert_eq!(a.n(), self.n, "slot count mismatch");
        self.map_coeffs(|c| a.mul(c))
    }

    /// Views a single-slot scalar tensor element as a block element,
    /// placing its coefficients in slot `k`.
    pub fn from_tensor_in_slot(t: &TensorElement, k: usize, n: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::BlockOutOfRange { k, n });
        }
        if t.dim() != 8 * n {
            return Err(Error::CoordinateLength { expected: 8 * n, got: t.dim() });
        }
        let mut out = MultiTensorElement::zero(n);
        for (b, c) in t.terms() {
            out.add_term(*b, MultiOctonion::embed(n, k, c.clone()));
        }
        Ok(out)
    }
}

impl<C: Coefficient> fmt::Debug for Tensor<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, c) in self.sorted_terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c:?})⊗{b:?}")?;
        }
        Ok(())
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl fmt::Debug for MultiTensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.tensor)
    }
}

impl Serialize for TensorElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_tensor(serializer, self.dim, self.sorted_terms(), "oct")
    }
}

impl Serialize for MultiTensorElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_tensor(serializer, self.dim(), self.sorted_terms(), "slots")
    }
}

fn serialize_tensor<S: Serializer, C: Serialize>(
    serializer: S,
    dim: usize,
    terms: Vec<(Blade, &C)>,
    key: &'static str,
) -> std::result::Result<S::Ok, S::Error> {
    struct Term<'a, C: Serialize> {
        blade: Blade,
        coeff: &'a C,
        key: &'static str,
    }
    impl<C: Serialize> Serialize for Term<'_, C> {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            let mut m = s.serialize_map(Some(2))?;
            m.serialize_entry("blade", &self.blade.indices())?;
            m.serialize_entry(self.key, self.coeff)?;
            m.end()
        }
    }
    struct Seq<'a, C: Serialize>(Vec<Term<'a, C>>);
    impl<C: Serialize> Serialize for Seq<'_, C> {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(self.0.len()))?;
            for t in &self.0 {
                seq.serialize_element(t)?;
            }
            seq.end()
        }
    }
    let mut map = serializer.serialize_map(Some(2))?;
    map.serialize_entry("dim", &dim)?;
    let seq = Seq(terms.into_iter().map(|(blade, coeff)| Term { blade, coeff, key }).collect());
    map.serialize_entry("terms", &seq)?;
    map.end()
}

impl Serialize for MultiOctonion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.slots.len()))?;
        for s in &self.slots {
            seq.serialize_element(s)?;
        }
        seq.end()
    }
}

#[derive(Deserialize)]
struct TensorTermDe {
    blade: Vec<usize>,
    oct: Octonion,
}

#[derive(Deserialize)]
struct TensorDe {
    dim: usize,
    terms: Vec<TensorTermDe>,
}

impl<'de> Deserialize<'de> for TensorElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = TensorDe::deserialize(deserializer)?;
        if raw.dim > 64 {
            return Err(D::Error::custom("at most 64 generators supported"));
        }
        let mut out = TensorElement::zero(raw.dim);
        for t in raw.terms {
            let blade = Blade::from_indices(&t.blade);
            if !blade.fits_dim(raw.dim) {
                return Err(D::Error::custom(format!(
                    "blade {:?} does not fit dim {}",
                    t.blade, raw.dim
                )));
            }
            out.add_term(blade, t.oct);
        }
        Ok(out)
    }
}

#[derive(Deserialize)]
struct MultiTermDe {
    blade: Vec<usize>,
    slots: Vec<Octonion>,
}

#[derive(Deserialize)]
struct MultiTensorDe {
    dim: usize,
    terms: Vec<MultiTermDe>,
}

impl<'de> Deserialize<'de> for MultiTensorElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MultiTensorDe::deserialize(deserializer)?;
        if raw.dim == 0 || !raw.dim.is_multiple_of(8) {
            return Err(D::Error::custom("dim must be a positive multiple of 8"));
        }
        let n = raw.dim / 8;
        let mut out = MultiTensorElement::zero(n);
        for t in raw.terms {
            if t.slots.len() != n {
                return Err(D::Error::custom(format!(
                    "expected {n} slots, got {}",
                    t.slots.len()
                )));
            }
            let blade = Blade::from_indices(&t.blade);
            if !blade.fits_dim(raw.dim) {
                return Err(D::Error::custom(format!(
                    "blade {:?} does not fit dim {}",
                    t.blade, raw.dim
                )));
            }
            out.add_term(blade, MultiOctonion::from_slots(t.slots));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis_tensor(i: usize, blade: Blade) -> TensorElement {
        let mut t = TensorElement::zero(8);
        t.add_term(blade, Octonion::basis(i));
        t
    }

    #[test]
    fn factorwise_product() {
        // (e1⊗g0)(e2⊗g1) = e3⊗g0g1
        let a = basis_tensor(1, Blade::generator(0));
        let b = basis_tensor(2, Blade::generator(1));
        let expect = basis_tensor(3, Blade::from_indices(&[0, 1]));
        assert_eq!(a.product(&b), expect);
    }

    #[test]
    fn scalar_blade_unit() {
        let unit = TensorElement::from_octonion(8, Octonion::one());
        let mut t = TensorElement::zero(8);
        t.add_term(Blade::from_indices(&[2, 5]), Octonion::basis(6));
        t.add_term(Blade::generator(1), Octonion::basis(3).scale(&Rational::from(-4)));
        assert_eq!(unit.product(&t), t);
        assert_eq!(t.product(&unit), t);
    }

    #[test]
    fn inherits_octonion_nonassociativity() {
        let e = |i| TensorElement::from_octonion(8, Octonion::basis(i));
        let lhs = e(1).product(&e(2)).product(&e(4));
        let rhs = e(1).product(&e(2).product(&e(4)));
        assert_ne!(lhs, rhs);
        assert_eq!(lhs, rhs.neg());
    }

    #[test]
    fn scalar_blade_restriction_reproduces_octonion_product() {
        for i in 0..8 {
            for j in 0..8 {
                let a = TensorElement::from_octonion(8, Octonion::basis(i));
                let b = TensorElement::from_octonion(8, Octonion::basis(j));
                let p = a.product(&b);
                let expect =
                    TensorElement::from_octonion(8, &Octonion::basis(i) * &Octonion::basis(j));
                assert_eq!(p, expect, "i={i} j={j}");
            }
        }
    }

    #[test]
    fn embed_vector_squares_to_norm() {
        let coords: Vec<Rational> = (0..8).map(|k| Rational::from(k as i64)).collect();
        let x = TensorElement::embed_vector(&coords);
        let norm: Rational = coords.iter().map(|c| c.square()).sum();
        let expect = TensorElement::from_octonion(8, Octonion::from_real(-norm));
        assert_eq!(x.product(&x), expect);
        assert!(TensorElement::embed_vector(&vec![Rational::zero(); 8]).is_zero());
    }

    #[test]
    fn left_mul_examples() {
        let t = basis_tensor(1, Blade::generator(5));
        assert_eq!(t.left_mul_oct(&Octonion::one()), t);
        // e1·(e1⊗g5) = -e0⊗g5
        let got = t.left_mul_oct(&Octonion::basis(1));
        let mut expect = TensorElement::zero(8);
        expect.add_term(Blade::generator(5), -&Octonion::one());
        assert_eq!(got, expect);
        // e1·(e2⊗g0) = e3⊗g0
        let t2 = basis_tensor(2, Blade::generator(0));
        assert_eq!(t2.left_mul_oct(&Octonion::basis(1)), basis_tensor(3, Blade::generator(0)));
    }

    #[test]
    fn octonion_component_direct_read() {
        let mut p = TensorElement::zero(8);
        let mut c = Octonion::basis(0).scale(&Rational::from(2));
        c = &c + &Octonion::basis(3).scale(&Rational::from(-5));
        p.add_term(Blade::generator(1), c);
        let p0 = p.octonion_component(0);
        let p3 = p.octonion_component(3);
        assert_eq!(p0, Multivector::generator(8, 1).scale(&Rational::from(2)));
        assert_eq!(p3, Multivector::generator(8, 1).scale(&Rational::from(-5)));
        assert!(p.octonion_component(5).is_zero());
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn tensor_dim_mismatch_panics() {
        let a = TensorElement::from_octonion(8, Octonion::one());
        let b = TensorElement::from_octonion(16, Octonion::one());
        let _ = a.product(&b);
    }

    #[test]
    fn multi_slotwise_product() {
        let n = 2;
        // slot-1 elements multiply within the slot
        let mut a = MultiTensorElement::zero(n);
        a.add_term(Blade::generator(8), MultiOctonion::basis(n, 1, 1));
        let mut b = MultiTensorElement::zero(n);
        b.add_term(Blade::generator(9), MultiOctonion::basis(n, 1, 2));
        let mut expect = MultiTensorElement::zero(n);
        expect.add_term(Blade::from_indices(&[8, 9]), MultiOctonion::basis(n, 1, 3));
        assert_eq!(a.product(&b), expect);
    }

    #[test]
    fn multi_cross_slot_vanishes() {
        let n = 2;
        let a = MultiTensorElement::from_multi_octonion(n, MultiOctonion::basis(n, 0, 1));
        let b = MultiTensorElement::from_multi_octonion(n, MultiOctonion::basis(n, 1, 1));
        assert!(a.product(&b).is_zero());
    }

    #[test]
    fn multi_unit_acts_as_identity() {
        let n = 3;
        let unit = MultiTensorElement::from_multi_octonion(n, MultiOctonion::unit(n));
        let mut t = MultiTensorElement::zero(n);
        t.add_term(Blade::from_indices(&[0, 17]), MultiOctonion::basis(n, 2, 5));
        t.add_term(Blade::generator(9), MultiOctonion::basis(n, 0, 7));
        assert_eq!(unit.product(&t), t);
        assert_eq!(t.product(&unit), t);
    }

    #[test]
    #[should_panic(expected = "slot count mismatch")]
    fn multi_slot_mismatch_panics() {
        let a = MultiTensorElement::from_multi_octonion(2, MultiOctonion::unit(2));
        let b = MultiTensorElement::from_multi_octonion(3, MultiOctonion::unit(3));
        let _ = a.product(&b);
    }

    #[test]
    fn multi_embed_is_slot_matched() {
        let n = 2;
        let mut coords = vec![Rational::zero(); 16];
        coords[3] = Rational::from(5);
        coords[12] = Rational::from(-1);
        let t = MultiTensorElement::embed_vector(&coords, n).unwrap();
        let c3 = t.coeff(Blade::generator(3)).unwrap();
        assert_eq!(c3.slot(0), &Octonion::from_real(Rational::from(5)));
        assert!(c3.slot(1).is_zero());
        let c12 = t.coeff(Blade::generator(12)).unwrap();
        assert!(c12.slot(0).is_zero());
        assert_eq!(c12.slot(1), &Octonion::from_real(Rational::from(-1)));
        assert!(MultiTensorElement::embed_vector(&coords[..7], n).is_err());
    }

    #[test]
    fn tensor_json_round_trip() {
        let mut t = TensorElement::zero(8);
        t.add_term(Blade::from_indices(&[0, 1]), Octonion::basis(3));
        t.add_term(Blade::generator(7), Octonion::basis(0).scale(&Rational::from_ratio(1, 2).unwrap()));
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(
            js,
            r#"{"dim":8,"terms":[{"blade":[7],"oct":["1/2","0","0","0","0","0","0","0"]},{"blade":[0,1],"oct":["0","0","0","1","0","0","0","0"]}]}"#
        );
        let back: TensorElement = serde_json::from_str(&js).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn multi_tensor_json_round_trip() {
        let n = 2;
        let mut t = MultiTensorElement::zero(n);
        t.add_term(Blade::generator(9), MultiOctonion::basis(n, 1, 3));
        t.add_term(Blade::from_indices(&[0, 8]), MultiOctonion::basis(n, 0, 5));
        let js = serde_json::to_string(&t).unwrap();
        assert!(js.contains(r#""slots""#));
        let back: MultiTensorElement = serde_json::from_str(&js).unwrap();
        assert_eq!(back, t);
        // slot count must match dim/8
        assert!(serde_json::from_str::<MultiTensorElement>(
            r#"{"dim":16,"terms":[{"blade":[0],"slots":[["1","0","0","0","0","0","0","0"]]}]}"#
        )
        .is_err());
    }
}
