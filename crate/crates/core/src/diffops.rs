//! Polynomials with tensor coefficients and constant-coefficient first and
//! second order operators: the Dirac operator, its twistor-twisted duals,
//! and the Hermitian vector derivatives built from the Witt elements.
//!
//! Operator coefficients multiply on the left of whatever they act on.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::involutions::Involution;
use crate::octonion::Octonion;
use crate::rational::Rational;
use crate::tensor::TensorElement;
use crate::witt::omega;

/// Sparse polynomial in `nvars` commuting variables with coefficients in the
/// tensor algebra on `dim` generators.
#[derive(Clone, PartialEq)]
pub struct Polynomial {
    nvars: usize,
    dim: usize,
    terms: BTreeMap<Vec<u32>, TensorElement>,
}

impl Polynomial {
    pub fn zero(nvars: usize, dim: usize) -> Self {
        Polynomial { nvars, dim, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, value: TensorElement) -> Self {
        let dim = value.dim();
        let mut p = Polynomial::zero(nvars, dim);
        p.add_term(vec![0; nvars], value);
        p
    }

    /// The coordinate `x_k` with real unit coefficient.
    pub fn coordinate(nvars: usize, dim: usize, k: usize) -> Self {
        assert!(k < nvars, "variable index out of range");
        let mut p = Polynomial::zero(nvars, dim);
        let mut exps = vec![0u32; nvars];
        exps[k] = 1;
        p.add_term(exps, TensorElement::from_octonion(dim, Octonion::one()));
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &TensorElement)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, value: TensorElement) {
        assert_eq!(exps.len(), self.nvars, "exponent length mismatch");
        assert_eq!(value.dim(), self.dim, "coefficient dimension mismatch");
        if value.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(c) => {
                let s = c.add(&value);
                if s.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(exps, value);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        assert_eq!(self.dim, rhs.dim, "coefficient dimension mismatch");
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(e.clone(), c.clone());
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

    pub fn map_coeffs(&self, f: impl Fn(&TensorElement) -> TensorElement) -> Self {
        let mut out = Polynomial::zero(self.nvars, self.dim);
        for (e, c) in self.terms.iter() {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Product with coefficients multiplied left-to-right in term order.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        assert_eq!(self.dim, rhs.dim, "coefficient dimension mismatch");
        let mut out = Polynomial::zero(self.nvars, self.dim);
        for (ea, ca) in self.terms.iter() {
            for (eb, cb) in rhs.terms.iter() {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca.product(cb));
            }
        }
        out
    }

    /// Formal partial derivative with respect to `x_k`.
    pub fn partial(&self, k: usize) -> Self {
        assert!(k < self.nvars, "variable index out of range");
        let mut out = Polynomial::zero(self.nvars, self.dim);
        for (e, c) in self.terms.iter() {
            let p = e[k];
            if p == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[k] = p - 1;
            out.add_term(exps, c.scale(&Rational::from(p as i64)));
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{c}]")?;
            for (k, p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, " x{k}")?,
                    _ => write!(f, " x{k}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a> {
            exps: &'a [u32],
            coeff: &'a TensorElement,
        }
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("exps", self.exps)?;
                m.serialize_entry("coeff", self.coeff)?;
                m.end()
            }
        }
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
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("nvars", &self.nvars)?;
        let terms = Seq(self.terms.iter().map(|(e, c)| Term { exps: e, coeff: c }).collect());
        map.serialize_entry("terms", &terms)?;
        map.end()
    }
}

#[derive(Deserialize)]
struct PolyTermDe {
    exps: Vec<u32>,
    coeff: TensorElement,
}

#[derive(Deserialize)]
struct PolynomialDe {
    nvars: usize,
    terms: Vec<PolyTermDe>,
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolynomialDe::deserialize(deserializer)?;
        // the coefficient dimension is taken from the terms; an empty
        // polynomial defaults to dim = nvars
        let dim = raw.terms.first().map(|t| t.coeff.dim()).unwrap_or(raw.nvars);
        let mut out = Polynomial::zero(raw.nvars, dim);
        for t in raw.terms {
            if t.exps.len() != raw.nvars {
                return Err(D::Error::custom("exponent length must equal nvars"));
            }
            if t.coeff.dim() != dim {
                return Err(D::Error::custom("inconsistent coefficient dimensions"));
            }
            out.add_term(t.exps, t.coeff);
        }
        Ok(out)
    }
}

/// Constant-coefficient operator `Σ_k c_k ∂/∂x_k`.
#[derive(Clone, PartialEq)]
pub struct FirstOrderOperator {
    nvars: usize,
    dim: usize,
    coeffs: Vec<TensorElement>,
}

impl FirstOrderOperator {
    pub fn zero(nvars: usize, dim: usize) -> Self {
        FirstOrderOperator { nvars, dim, coeffs: vec![TensorElement::zero(dim); nvars] }
    }

    pub fn from_coeffs(coeffs: Vec<TensorElement>) -> Self {
        assert!(!coeffs.is_empty());
        let dim = coeffs[0].dim();
        assert!(coeffs.iter().all(|c| c.dim() == dim), "coefficient dimension mismatch");
        FirstOrderOperator { nvars: coeffs.len(), dim, coeffs }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, k: usize) -> &TensorElement {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(TensorElement::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect();
        FirstOrderOperator { nvars: self.nvars, dim: self.dim, coeffs }
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(k))
    }

    pub fn map_coeffs(&self, f: impl Fn(&TensorElement) -> TensorElement) -> Self {
        FirstOrderOperator {
            nvars: self.nvars,
            dim: self.dim,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Applies the operator: `Σ_k c_k · ∂p/∂x_k`, coefficients on the left.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, p.nvars(), "variable count mismatch");
        assert_eq!(self.dim, p.dim(), "coefficient dimension mismatch");
        let mut out = Polynomial::zero(self.nvars, self.dim);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let dp = p.partial(k);
            for (e, pc) in dp.terms() {
                out.add_term(e.clone(), c.product(pc));
            }
        }
        out
    }

    /// The anticommutator `D1 D2 + D2 D1` as a second order operator with
    /// coefficients accumulated on unordered variable pairs.
    pub fn anticommutator(&self, rhs: &Self) -> SecondOrderOperator {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        assert_eq!(self.dim, rhs.dim, "coefficient dimension mismatch");
        let mut out = SecondOrderOperator::zero(self.nvars, self.dim);
        for k in 0..self.nvars {
            for l in 0..self.nvars {
                let a = &self.coeffs[k];
                let b = &rhs.coeffs[l];
                if !a.is_zero() && !b.is_zero() {
                    out.add_pair(k, l, a.product(b));
                }
                let c = &rhs.coeffs[k];
                let d = &self.coeffs[l];
                if !c.is_zero() && !d.is_zero() {
                    out.add_pair(k, l, c.product(d));
                }
            }
        }
        out
    }
}

impl fmt::Debug for FirstOrderOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{c}] d{k}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Constant-coefficient operator `Σ c_kl ∂²/∂x_k∂x_l`, keys canonical `k ≤ l`.
#[derive(Clone, PartialEq)]
pub struct SecondOrderOperator {
    nvars: usize,
    dim: usize,
    coeffs: BTreeMap<(usize, usize), TensorElement>,
}

impl SecondOrderOperator {
    pub fn zero(nvars: usize, dim: usize) -> Self {
        SecondOrderOperator { nvars, dim, coeffs: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize, l: usize) -> Option<&TensorElement> {
        let key = if k <= l { (k, l) } else { (l, k) };
        self.coeffs.get(&key)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &TensorElement)> {
        self.coeffs.iter()
    }

    /// Accumulates a coefficient on the unordered pair `{k, l}`.
    pub fn add_pair(&mut self, k: usize, l: usize, value: TensorElement) {
        assert!(k < self.nvars && l < self.nvars, "variable index out of range");
        assert_eq!(value.dim(), self.dim, "coefficient dimension mismatch");
        if value.is_zero() {
            return;
        }
        let key = if k <= l { (k, l) } else { (l, k) };
        match self.coeffs.get_mut(&key) {
            Some(c) => {
                let s = c.add(&value);
                if s.is_zero() {
                    self.coeffs.remove(&key);
                } else {
                    *c = s;
                }
            }
            None => {
                self.coeffs.insert(key, value);
            }
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = SecondOrderOperator::zero(self.nvars, self.dim);
        for (&(a, b), c) in self.coeffs.iter() {
            out.add_pair(a, b, c.scale(k));
        }
        out
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, p.nvars(), "variable count mismatch");
        assert_eq!(self.dim, p.dim(), "coefficient dimension mismatch");
        let mut out = Polynomial::zero(self.nvars, self.dim);
        for (&(k, l), c) in self.coeffs.iter() {
            let dp = p.partial(k).partial(l);
            for (e, pc) in dp.terms() {
                out.add_term(e.clone(), c.product(pc));
            }
        }
        out
    }
}

impl fmt::Debug for SecondOrderOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&(k, l), c) in self.coeffs.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{c}] d{k}d{l}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The Dirac operator `Σ_k g_k ∂/∂x_k` on all `nvars` variables.
pub fn dirac(nvars: usize) -> Result<FirstOrderOperator> {
    if nvars == 0 || !nvars.is_multiple_of(8) {
        return Err(Error::VariableCount(nvars));
    }
    let coeffs = (0..nvars)
        .map(|k| {
            let mut t = TensorElement::zero(nvars);
            t.add_term(crate::clifford::Blade::generator(k), Octonion::one());
            t
        })
        .collect();
    Ok(FirstOrderOperator::from_coeffs(coeffs))
}

/// The Dirac operator of block `k`: `Σ_{i<8} g_{8k+i} ∂/∂x_{8k+i}` inside
/// the algebra on `8n` generators.
pub fn block_dirac(k: usize, n: usize) -> Result<FirstOrderOperator> {
    if k >= n {
        return Err(Error::BlockOutOfRange { k, n });
    }
    let nvars = 8 * n;
    let mut op = FirstOrderOperator::zero(nvars, nvars);
    for i in 0..8 {
        let m = 8 * k + i;
        let mut t = TensorElement::zero(nvars);
        t.add_term(crate::clifford::Blade::generator(m), Octonion::one());
        op.coeffs[m] = t;
    }
    Ok(op)
}

/// Fischer-dual of the twistor recipe applied to the block Dirac symbol:
/// the coefficient of `∂/∂x_{8k+j}` is the grade-1 element with the
/// coordinates of `e_j · conj(e_i)`, placed at the block offset.
pub fn twistor_derivative(i: usize, k: usize, n: usize) -> Result<FirstOrderOperator> {
    assert!(i < 8, "frame index out of range");
    if k >= n {
        return Err(Error::BlockOutOfRange { k, n });
    }
    let nvars = 8 * n;
    let mut op = FirstOrderOperator::zero(nvars, nvars);
    let ei_conj = Octonion::basis(i).conj();
    for j in 0..8 {
        let o = &Octonion::basis(j) * &ei_conj;
        let mut coords = vec![Rational::zero(); nvars];
        for m in 0..8 {
            coords[8 * k + m] = o.coeff(m).clone();
        }
        op.coeffs[8 * k + j] = TensorElement::embed_vector(&coords);
    }
    Ok(op)
}

/// Hermitian vector derivative `f_i^k · J_i(Φ(∂))`, validated against the
/// expansion `Σ_j J_i(e_j) ∂_{X_j}`; the two must coincide.
pub fn hermitian_derivative(i: usize, k: usize, n: usize) -> Result<FirstOrderOperator> {
    assert!(i < 8, "frame index out of range");
    let om = omega(k, n)?;
    let nvars = 8 * n;
    let inv = Involution::new(i);
    let f_ik = inv.apply_tensor(&om);

    let mut direct = FirstOrderOperator::zero(nvars, nvars);
    for j in 0..8 {
        let symbol = TensorElement::from_octonion(nvars, inv.apply(&Octonion::basis(j)));
        direct.coeffs[8 * k + j] = f_ik.product(&symbol);
    }

    let mut expanded = FirstOrderOperator::zero(nvars, nvars);
    for j in 0..8 {
        let mut term = twistor_derivative(j, k, n)?.map_coeffs(|c| c.left_mul_oct(&Octonion::basis(j)));
        if inv.basis_sign(j) < 0 {
            term = term.neg();
        }
        expanded = expanded.add(&term);
    }

    if direct != expanded {
        return Err(Error::IdentityMismatch {
            context: format!("hermitian derivative routes i={i} k={k} n={n}"),
            expected: format!("{expanded:?}"),
            actual: format!("{direct:?}"),
        });
    }
    Ok(direct)
}

/// The Laplacian `Σ_k ∂²/∂x_k²` on all variables.
pub fn laplacian(nvars: usize) -> SecondOrderOperator {
    let mut out = SecondOrderOperator::zero(nvars, nvars);
    for kk in 0..nvars {
        out.add_pair(kk, kk, TensorElement::from_octonion(nvars, Octonion::one()));
    }
    out
}

/// The Laplacian of block `k` inside `8n` variables.
pub fn block_laplacian(k: usize, n: usize) -> Result<SecondOrderOperator> {
    if k >= n {
        return Err(Error::BlockOutOfRange { k, n });
    }
    let nvars = 8 * n;
    let mut out = SecondOrderOperator::zero(nvars, nvars);
    for i in 0..8 {
        let m = 8 * k + i;
        out.add_pair(m, m, TensorElement::from_octonion(nvars, Octonion::one()));
    }
    Ok(out)
}

/// The coordinates as degree-1 polynomials: the frame vectors of the formal
/// vector `Σ x_k g_k`, with grade-1 tensor coefficients.
pub fn formal_twistor_frame() -> [Polynomial; 8] {
    std::array::from_fn(|i| {
        let mut p = Polynomial::zero(8, 8);
        let ei_conj = Octonion::basis(i).conj();
        for j in 0..8 {
            let o = &Octonion::basis(j) * &ei_conj;
            let mut exps = vec![0u32; 8];
            exps[j] = 1;
            p.add_term(exps, TensorElement::embed_vector(o.coeffs()));
        }
        p
    })
}

/// The Hermitian variables over formal coordinates, as polynomials with
/// tensor coefficients: `Z_i = Σ_j J_i(e_j) X_j`.
pub fn formal_hermitian_frame() -> [Polynomial; 8] {
    let tw = formal_twistor_frame();
    std::array::from_fn(|i| {
        let inv = Involution::new(i);
        let mut acc = Polynomial::zero(8, 8);
        for (j, xj) in tw.iter().enumerate() {
            let mut term = xj.map_coeffs(|c| c.left_mul_oct(&Octonion::basis(j)));
            if inv.basis_sign(j) < 0 {
                term = term.neg();
            }
            acc = acc.add(&term);
        }
        acc
    })
}

/// `Σ_k x_k²` with real unit coefficient.
pub fn norm_sq_polynomial(nvars: usize, dim: usize) -> Polynomial {
    let mut p = Polynomial::zero(nvars, dim);
    for k in 0..nvars {
        let mut exps = vec![0u32; nvars];
        exps[k] = 2;
        p.add_term(exps, TensorElement::from_octonion(dim, Octonion::one()));
    }
    p
}
