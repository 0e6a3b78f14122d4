//! The finite involution subgroup of the octonion automorphisms, its sign
//! bookkeeping, and the averaging projections built from it.
//!
//! `J_j` acts on the generators `e_1, e_2, e_4` by the binary digits of `j`
//! and extends multiplicatively; the sign on every other basis element is
//! derived from a product decomposition, never hard-coded.

use once_cell::sync::Lazy;

use crate::clifford::Multivector;
use crate::octonion::{basis_mul, Octonion, FANO_TRIPLES};
use crate::rational::Rational;
use crate::tensor::{MultiTensorElement, TensorElement};

/// One of the eight sign involutions, indexed by its binary digits.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Involution(u8);

static SIGN_TABLE: Lazy<[[i8; 8]; 8]> = Lazy::new(|| std::array::from_fn(|j| derive_signs(j as u8)));

/// Signs on the whole basis, derived from the generator action.
/// Composite indices come from products: e3 = e1 e2, e5 = e1 e4,
/// e6 = e2 e4, e7 = e3 e4.
fn derive_signs(j: u8) -> [i8; 8] {
    let bit = |b: u8| if j & b != 0 { -1i8 } else { 1 };
    let mut s = [0i8; 8];
    s[0] = 1;
    s[1] = bit(1);
    s[2] = bit(2);
    s[4] = bit(4);
    for (a, b) in [(1, 2), (1, 4), (2, 4), (3, 4)] {
        let (_, k) = basis_mul(a, b);
        s[k] = s[a] * s[b];
    }
    debug_assert!(s.iter().all(|&v| v != 0));
    s
}

static SIGMA_TABLE: Lazy<[[u8; 8]; 8]> = Lazy::new(|| {
    std::array::from_fn(|j| {
        std::array::from_fn(|i| {
            // evaluate J_j(conj(e_i)) and read off the sign against e_i
            let image = Involution::new(j).apply(&Octonion::basis(i).conj());
            let c = image.coeff(i);
            if c.is_one() {
                0
            } else if (-c).is_one() {
                1
            } else {
                unreachable!("involution image is not ±e_i")
            }
        })
    })
});

impl Involution {
    pub fn new(j: usize) -> Self {
        assert!(j < 8, "involution index out of range");
        Involution(j as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> [Involution; 8] {
        std::array::from_fn(|j| Involution(j as u8))
    }

    /// The sign of the action on a basis element: `J_j(e_i) = sign · e_i`.
    pub fn basis_sign(self, i: usize) -> i8 {
        SIGN_TABLE[self.0 as usize][i]
    }

    pub fn apply(self, x: &Octonion) -> Octonion {
        let coeffs: [Rational; 8] = std::array::from_fn(|i| {
            if self.basis_sign(i) > 0 {
                x.coeff(i).clone()
            } else {
                -x.coeff(i)
            }
        });
        Octonion::from_coeffs(coeffs)
    }

    /// Extension to the tensor algebra: acts on octonion coefficients only.
    pub fn apply_tensor(self, t: &TensorElement) -> TensorElement {
        t.map_coeffs(|c| self.apply(c))
    }

    /// Slotwise extension to the block algebra.
    pub fn apply_multi(self, t: &MultiTensorElement) -> MultiTensorElement {
        t.map_coeffs(|c| {
            crate::tensor::MultiOctonion::from_slots(
                c.slots().iter().map(|o| self.apply(o)).collect(),
            )
        })
    }

    /// Group law: composition is XOR on indices.
    pub fn compose(self, other: Involution) -> Involution {
        Involution(self.0 ^ other.0)
    }

    /// Whether the pullback of the defining 3-form keeps every oriented
    /// triple at coefficient +1.
    pub fn preserves_three_form(self) -> bool {
        FANO_TRIPLES
            .iter()
            .all(|&[a, b, c]| self.basis_sign(a) * self.basis_sign(b) * self.basis_sign(c) == 1)
    }
}

/// The sign exponent table: `J_j(conj(e_i)) = (-1)^{σ(j,i)} e_i`.
pub fn sigma(j: usize, i: usize) -> u8 {
    SIGMA_TABLE[j][i]
}

pub fn sigma_table() -> &'static [[u8; 8]; 8] {
    &SIGMA_TABLE
}

/// The raw averaging value `(1/8) e_i Σ_j (-1)^{σ(j,i)} J_j(x)`.
pub fn projection_average(i: usize, x: &Octonion) -> Octonion {
    let mut acc = Octonion::zero();
    for j in 0..8 {
        let image = Involution::new(j).apply(x);
        if sigma(j, i) == 0 {
            acc = &acc + &image;
        } else {
            acc = &acc - &image;
        }
    }
    (&Octonion::basis(i) * &acc).scale(&Rational::from_ratio(1, 8).expect("8 != 0"))
}

/// Coefficient extraction through the averaging identity, not a slot read.
/// The result is checked to be real before being returned.
pub fn project_coefficient(i: usize, x: &Octonion) -> Rational {
    let avg = projection_average(i, x);
    assert!(avg.is_real(), "projection average has imaginary part: {avg}");
    avg.real_part().clone()
}

/// Tensor-level averaging value, same formula lifted coefficientwise.
pub fn tensor_projection_average(i: usize, p: &TensorElement) -> TensorElement {
    let mut acc = TensorElement::zero(p.dim());
    for j in 0..8 {
        let image = Involution::new(j).apply_tensor(p);
        if sigma(j, i) == 0 {
            acc = acc.add(&image);
        } else {
            acc = acc.sub(&image);
        }
    }
    acc.left_mul_oct(&Octonion::basis(i)).scale(&Rational::from_ratio(1, 8).expect("8 != 0"))
}

/// Extracts the Clifford coefficient along octonion slot `i` of
/// `p = Σ e_i p_i` via the averaging identity.
pub fn project_tensor_coefficient(i: usize, p: &TensorElement) -> Multivector {
    let avg = tensor_projection_average(i, p);
    avg.as_multivector()
        .expect("tensor projection average has imaginary coefficients")
}
