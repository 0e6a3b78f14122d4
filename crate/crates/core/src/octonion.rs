//! Exact octonion arithmetic.
//!
//! The product is generated by seven oriented index triples `(a, b, c)`
//! meaning `e_a e_b = e_c`, cyclic in `(a, b, c)`, with a sign flip on
//! reversed order. Together with `e_0 = 1` and `e_i^2 = -1` this fixes the
//! full 8×8 basis table.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use once_cell::sync::Lazy;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;

/// The seven oriented lines of the multiplication table.
/// Each triple `(a, b, c)` satisfies `e_a e_b = e_c`.
pub const FANO_TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 7, 6],
    [2, 5, 7],
    [2, 4, 6],
    [3, 4, 7],
    [3, 6, 5],
];

static BASIS_TABLE: Lazy<[[(i8, usize); 8]; 8]> = Lazy::new(build_basis_table);

fn build_basis_table() -> [[(i8, usize); 8]; 8] {
    let mut t = [[(0i8, 0usize); 8]; 8];
    for i in 0..8 {
        t[0][i] = (1, i);
        t[i][0] = (1, i);
    }
    for i in 1..8 {
        t[i][i] = (-1, 0);
    }
    for &[a, b, c] in FANO_TRIPLES.iter() {
        for &(x, y, z) in &[(a, b, c), (b, c, a), (c, a, b)] {
            t[x][y] = (1, z);
            t[y][x] = (-1, z);
        }
    }
    // every off-diagonal imaginary pair must be covered by exactly one line
    for (i, row) in t.iter().enumerate() {
        for (j, &(s, _)) in row.iter().enumerate() {
            assert!(s != 0, "basis table hole at ({i}, {j})");
        }
    }
    t
}

/// Product of basis elements: `e_i e_j = sign · e_k`.
pub fn basis_mul(i: usize, j: usize) -> (i8, usize) {
    BASIS_TABLE[i][j]
}

/// An octonion with exact rational coefficients over `e_0..e_7`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Octonion {
    coeffs: [Rational; 8],
}

impl Octonion {
    pub fn zero() -> Self {
        Octonion::default()
    }

    pub fn one() -> Self {
        Octonion::basis(0)
    }

    pub fn basis(i: usize) -> Self {
        assert!(i < 8, "basis index out of range");
        let mut o = Octonion::default();
        o.coeffs[i] = Rational::one();
        o
    }

    pub fn from_coeffs(coeffs: [Rational; 8]) -> Self {
        Octonion { coeffs }
    }

    /// The isometry from coordinates: `(x_0, .., x_7) ↦ Σ x_i e_i`.
    pub fn from_coords(coords: &[Rational]) -> Self {
        assert_eq!(coords.len(), 8, "octonion coordinates must have length 8");
        let coeffs: [Rational; 8] = std::array::from_fn(|i| coords[i].clone());
        Octonion { coeffs }
    }

    pub fn from_real(r: Rational) -> Self {
        let mut o = Octonion::default();
        o.coeffs[0] = r;
        o
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational; 8] {
        &self.coeffs
    }

    pub fn into_coords(self) -> [Rational; 8] {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// True when the only possibly nonzero coefficient is the real slot.
    pub fn is_real(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn conj(&self) -> Self {
        let coeffs: [Rational; 8] = std::array::from_fn(|i| {
            if i == 0 {
                self.coeffs[0].clone()
            } else {
                -&self.coeffs[i]
            }
        });
        Octonion { coeffs }
    }

    /// Euclidean inner product `Σ p_i q_i`.
    ///
    /// Equals `Re(conj(p)·q)`; the tests pin that identity.
    pub fn inner(&self, other: &Octonion) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..8 {
            acc += &(&self.coeffs[i] * &other.coeffs[i]);
        }
        acc
    }

    pub fn norm_sq(&self) -> Rational {
        self.inner(self)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let coeffs: [Rational; 8] = std::array::from_fn(|i| &self.coeffs[i] * k);
        Octonion { coeffs }
    }

    /// Multiplicative inverse `conj(a)/|a|²`, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return None;
        }
        let inv = n.recip().expect("nonzero norm");
        Some(self.conj().scale(&inv))
    }

    pub fn real_part(&self) -> &Rational {
        &self.coeffs[0]
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, rhs: &Octonion) -> Octonion {
        let coeffs: [Rational; 8] = std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]);
        Octonion { coeffs }
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, rhs: &Octonion) -> Octonion {
        let coeffs: [Rational; 8] = std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]);
        Octonion { coeffs }
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        let coeffs: [Rational; 8] = std::array::from_fn(|i| -&self.coeffs[i]);
        Octonion { coeffs }
    }
}

impl Mul for &Octonion {
    type Output = Octonion;

    /// Bilinear extension of the basis table.
    fn mul(self, rhs: &Octonion) -> Octonion {
        let mut out: [Rational; 8] = Default::default();
        for i in 0..8 {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let (sign, k) = basis_mul(i, j);
                let p = &self.coeffs[i] * &rhs.coeffs[j];
                if sign > 0 {
                    out[k] += &p;
                } else {
                    out[k] -= &p;
                }
            }
        }
        Octonion { coeffs: out }
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        &self + &rhs
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        &self - &rhs
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        -&self
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        &self * &rhs
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = if c.is_negative() { -c } else { c.clone() };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "e{i}")?;
            } else {
                write!(f, "{mag} e{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for Octonion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(8))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Octonion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<Rational>::deserialize(deserializer)?;
        if v.len() != 8 {
            return Err(serde::de::Error::custom(format!(
                "octonion needs 8 coefficients, got {}",
                v.len()
            )));
        }
        let coeffs: [Rational; 8] = std::array::from_fn(|i| v[i].clone());
        Ok(Octonion { coeffs })
    }
}
