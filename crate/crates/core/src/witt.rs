//! Witt basis construction over the tensor algebras, twistor frames,
//! Hermitian variables, and the conversions between the two coordinate
//! systems, including the block generalizations.

use crate::clifford::{Blade, Multivector};
use crate::error::{Error, Result};
use crate::involutions::{sigma, Involution};
use crate::octonion::Octonion;
use crate::rational::Rational;
use crate::tensor::{MultiOctonion, MultiTensorElement, TensorElement};

fn one_eighth() -> Rational {
    Rational::from_ratio(1, 8).expect("8 != 0")
}

fn check_block_count(n: usize) -> Result<()> {
    if n < 1 || n > 8 {
        return Err(Error::InvalidInput(format!(
            "block count {n} out of range 1..=8 (blades hold at most 64 generators)"
        )));
    }
    Ok(())
}

/// The canonical element of block `k`: `Σ_i conj(e_i) ⊗ g_{8k+i}` in the
/// algebra on `8n` generators.
pub fn omega(k: usize, n: usize) -> Result<TensorElement> {
    check_block_count(n)?;
    if k >= n {
        return Err(Error::BlockOutOfRange { k, n });
    }
    let mut out = TensorElement::zero(8 * n);
    for i in 0..8 {
        out.add_term(Blade::generator(8 * k + i), Octonion::basis(i).conj());
    }
    Ok(out)
}

/// Block variant with slot-`k` coefficients: `Σ_i conj(e_i^k) ⊗ g_{8k+i}`.
pub fn omega_multi(k: usize, n: usize) -> Result<MultiTensorElement> {
    check_block_count(n)?;
    if k >= n {
        return Err(Error::BlockOutOfRange { k, n });
    }
    let mut out = MultiTensorElement::zero(n);
    for i in 0..8 {
        out.add_term(
            Blade::generator(8 * k + i),
            MultiOctonion::embed(n, k, Octonion::basis(i).conj()),
        );
    }
    Ok(out)
}

/// The table `f_i^k = J_i(Ω_k)` for all blocks of the algebra on `8n`
/// generators.
#[derive(Clone)]
pub struct WittBasis {
    n: usize,
    f: Vec<[TensorElement; 8]>,
}

impl WittBasis {
    pub fn new(n: usize) -> Self {
        assert!((1..=8).contains(&n), "block count out of range 1..=8");
        let f = (0..n)
            .map(|k| {
                let om = omega(k, n).expect("block in range");
                std::array::from_fn(|i| Involution::new(i).apply_tensor(&om))
            })
            .collect();
        WittBasis { n, f }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self, k: usize, i: usize) -> &TensorElement {
        &self.f[k][i]
    }

    /// All 64 pairwise products `f_i^k f_j^k` within one block, reported as
    /// data; no expected values are asserted anywhere.
    pub fn pair_products(&self, k: usize) -> Vec<Vec<TensorElement>> {
        (0..8)
            .map(|i| (0..8).map(|j| self.f[k][i].product(&self.f[k][j])).collect())
            .collect()
    }
}

/// Same table over the slot-tuple coefficients: `f_i^k = J_i(Ω̂_k)`.
#[derive(Clone)]
pub struct MultiWittBasis {
    n: usize,
    f: Vec<[MultiTensorElement; 8]>,
}

impl MultiWittBasis {
    pub fn new(n: usize) -> Self {
        assert!((1..=8).contains(&n), "block count out of range 1..=8");
        let f = (0..n)
            .map(|k| {
                let om = omega_multi(k, n).expect("block in range");
                std::array::from_fn(|i| Involution::new(i).apply_multi(&om))
            })
            .collect();
        MultiWittBasis { n, f }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self, k: usize, i: usize) -> &MultiTensorElement {
        &self.f[k][i]
    }
}

/// Eight vectors generated from one block vector, stored in block-local
/// coordinates; `block` fixes the generator offset in the ambient algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct TwistorFrame {
    n: usize,
    block: usize,
    vectors: [[Rational; 8]; 8],
}

impl TwistorFrame {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block(&self) -> usize {
        self.block
    }

    pub fn vector(&self, i: usize) -> &[Rational; 8] {
        &self.vectors[i]
    }

    /// The frame vector as a grade-1 element of the ambient algebra,
    /// placed at the block offset.
    pub fn to_multivector(&self, i: usize) -> Multivector {
        let mut coords = vec![Rational::zero(); 8 * self.n];
        for (m, c) in self.vectors[i].iter().enumerate() {
            coords[8 * self.block + m] = c.clone();
        }
        Multivector::from_vector(&coords)
    }

    pub fn gram(&self, i: usize, j: usize) -> Rational {
        let mut acc = Rational::zero();
        for m in 0..8 {
            acc += &(&self.vectors[i][m] * &self.vectors[j][m]);
        }
        acc
    }
}

/// Eight tensor elements per block, the complex-style coordinates attached
/// to a block vector.
#[derive(Clone, PartialEq, Debug)]
pub struct HermitianFrame {
    n: usize,
    block: usize,
    z: [TensorElement; 8],
}

impl HermitianFrame {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block(&self) -> usize {
        self.block
    }

    pub fn z(&self, i: usize) -> &TensorElement {
        &self.z[i]
    }

    pub fn elements(&self) -> &[TensorElement; 8] {
        &self.z
    }
}

fn check_block_coords(coords: &[Rational]) -> Result<()> {
    if coords.len() != 8 {
        return Err(Error::CoordinateLength { expected: 8, got: coords.len() });
    }
    Ok(())
}

/// The frame `X_i = Φ⁻¹(Φ(X)·conj(e_i))` for a block vector.
pub fn twistor_vectors_block(coords: &[Rational], k: usize, n: usize) -> Result<TwistorFrame> {
    check_block_coords(coords)?;
    check_block_count(n)?;
    if k >= n {
        return Err(Error::BlockOutOfRange { k, n });
    }
    let x = Octonion::from_coords(coords);
    let vectors: [[Rational; 8]; 8] =
        std::array::from_fn(|i| (&x * &Octonion::basis(i).conj()).into_coords());
    Ok(TwistorFrame { n, block: k, vectors })
}

/// Single-block convenience form.
pub fn twistor_vectors(coords: &[Rational]) -> TwistorFrame {
    twistor_vectors_block(coords, 0, 1).expect("length checked by caller")
}

/// Builds the Hermitian frame of a block vector, evaluating both defining
/// forms `J_i(Ω_k Φ(X))` and `f_i^k · J_i(Φ(X))` and insisting they agree.
pub fn hermitian_variables_block(coords: &[Rational], k: usize, n: usize) -> Result<HermitianFrame> {
    check_block_coords(coords)?;
    let om = omega(k, n)?;
    let dim = 8 * n;
    let phi_x = Octonion::from_coords(coords);
    let omega_phi = om.product(&TensorElement::from_octonion(dim, phi_x.clone()));
    let z: [TensorElement; 8] = std::array::from_fn(|i| {
        let inv = Involution::new(i);
        let twisted = inv.apply_tensor(&omega_phi);
        let via_basis =
            inv.apply_tensor(&om).product(&TensorElement::from_octonion(dim, inv.apply(&phi_x)));
        assert_eq!(twisted, via_basis, "hermitian variable construction routes disagree (i={i})");
        twisted
    });
    Ok(HermitianFrame { n, block: k, z })
}

pub fn hermitian_variables(coords: &[Rational]) -> HermitianFrame {
    hermitian_variables_block(coords, 0, 1).expect("length checked by caller")
}

/// Recovers the twistor frame from a Hermitian frame:
/// `X_i = (1/8) e_i Σ_j (-1)^{σ(j,i)} Z_j`.
///
/// Errors when any recovered element is not a real grade-1 vector supported
/// on the frame's block.
pub fn twistor_from_hermitian(frame: &HermitianFrame) -> Result<TwistorFrame> {
    let dim = 8 * frame.n;
    let lo = 8 * frame.block;
    let mut vectors: [[Rational; 8]; 8] = std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()));
    for (i, out) in vectors.iter_mut().enumerate() {
        let mut acc = TensorElement::zero(dim);
        for j in 0..8 {
            if sigma(j, i) == 0 {
                acc = acc.add(&frame.z[j]);
            } else {
                acc = acc.sub(&frame.z[j]);
            }
        }
        let xi = acc.left_mul_oct(&Octonion::basis(i)).scale(&one_eighth());
        let mv = xi.as_multivector()?;
        let coords = mv
            .vector_coords()
            .ok_or_else(|| Error::NotRealVector(format!("{mv}")))?;
        for (m, c) in coords.iter().enumerate() {
            if (m < lo || m >= lo + 8) && !c.is_zero() {
                return Err(Error::NotRealVector(format!("support outside block: {mv}")));
            }
        }
        out.clone_from_slice(&coords[lo..lo + 8]);
    }
    Ok(TwistorFrame { n: frame.n, block: frame.block, vectors })
}

/// The converse conversion: `Z_i = Σ_j J_i(e_j) X_j`.
pub fn hermitian_from_twistor(frame: &TwistorFrame) -> HermitianFrame {
    let dim = 8 * frame.n;
    let z: [TensorElement; 8] = std::array::from_fn(|i| {
        let inv = Involution::new(i);
        let mut acc = TensorElement::zero(dim);
        for j in 0..8 {
            let xj = TensorElement::from_multivector(&frame.to_multivector(j));
            let mut term = xj.left_mul_oct(&Octonion::basis(j));
            if inv.basis_sign(j) < 0 {
                term = term.neg();
            }
            acc = acc.add(&term);
        }
        acc
    });
    HermitianFrame { n: frame.n, block: frame.block, z }
}

/// Evaluates `(1/8) conj(e_i) Σ_j (-1)^{σ(j,i)} f_j^k` and checks that it
/// equals `e_0⊗g_{8k+i}`, returning the evaluated combination.
pub fn express_generator(i: usize, k: usize, basis: &WittBasis) -> Result<TensorElement> {
    let dim = 8 * basis.n();
    let mut acc = TensorElement::zero(dim);
    for j in 0..8 {
        if sigma(j, i) == 0 {
            acc = acc.add(basis.f(k, j));
        } else {
            acc = acc.sub(basis.f(k, j));
        }
    }
    let combo = acc.left_mul_oct(&Octonion::basis(i).conj()).scale(&one_eighth());
    let mut expected = TensorElement::zero(dim);
    expected.add_term(Blade::generator(8 * k + i), Octonion::one());
    if combo == expected {
        Ok(combo)
    } else {
        Err(Error::IdentityMismatch {
            context: format!("generator resolution i={i} k={k}"),
            expected: format!("{expected}"),
            actual: format!("{combo}"),
        })
    }
}

/// Per-block frames of a decomposed vector plus the reconstruction verdict.
pub struct WittDecomposition {
    pub n: usize,
    pub blocks: Vec<BlockFrames>,
    pub reconstruction_exact: bool,
}

pub struct BlockFrames {
    pub twistor: TwistorFrame,
    pub hermitian: HermitianFrame,
}

/// Splits a vector of `8n` coordinates into blocks, builds the frames per
/// block, and checks `embed(X) = (1/8) Σ_j Σ_i Z_i^j` exactly.
pub fn witt_decompose(coords: &[Rational], n: usize) -> Result<WittDecomposition> {
    check_block_count(n)?;
    if coords.len() != 8 * n {
        return Err(Error::CoordinateLength { expected: 8 * n, got: coords.len() });
    }
    let dim = 8 * n;
    let mut blocks = Vec::with_capacity(n);
    let mut total = TensorElement::zero(dim);
    for k in 0..n {
        let block_coords = &coords[8 * k..8 * k + 8];
        let twistor = twistor_vectors_block(block_coords, k, n)?;
        let hermitian = hermitian_variables_block(block_coords, k, n)?;
        for i in 0..8 {
            total = total.add(hermitian.z(i));
        }
        blocks.push(BlockFrames { twistor, hermitian });
    }
    let reconstruction = total.scale(&one_eighth());
    let reconstruction_exact = reconstruction == TensorElement::embed_vector(coords);
    Ok(WittDecomposition { n, blocks, reconstruction_exact })
}

/// Result of checking `X_i X_j + X_j X_i = -2|X|² δ_ij` and the Gram
/// identity over all 64 pairs.
pub struct AnticommutationReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl AnticommutationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn twistor_anticommutation(coords: &[Rational]) -> Result<AnticommutationReport> {
    check_block_coords(coords)?;
    let frame = twistor_vectors(coords);
    let norm: Rational = coords.iter().map(Rational::square).sum();
    let minus_two_norm = Rational::from(-2) * &norm;
    let mut checks = 0usize;
    let mut failures = Vec::new();
    for i in 0..8 {
        let xi = frame.to_multivector(i);
        for j in 0..8 {
            let xj = frame.to_multivector(j);
            let anti = xi.product(&xj).add(&xj.product(&xi));
            let expect = if i == j {
                Multivector::scalar(8, minus_two_norm.clone())
            } else {
                Multivector::zero(8)
            };
            checks += 1;
            if anti != expect {
                failures.push(format!("anticommutator ({i},{j}): got {anti}, want {expect}"));
            }
            let gram_expect = if i == j { norm.clone() } else { Rational::zero() };
            checks += 1;
            if frame.gram(i, j) != gram_expect {
                failures.push(format!("gram ({i},{j}): got {}, want {gram_expect}", frame.gram(i, j)));
            }
        }
    }
    Ok(AnticommutationReport { checks, failures })
}

/// Block reconstruction over the slot-tuple algebra: checks
/// `embed(X) = (1/8) Σ_j Σ_i J_i(Ω̂_j Φ_j(X^j))` with the slot-matched
/// embedding.
pub fn multi_witt_reconstruction(coords: &[Rational], n: usize) -> Result<bool> {
    check_block_count(n)?;
    if coords.len() != 8 * n {
        return Err(Error::CoordinateLength { expected: 8 * n, got: coords.len() });
    }
    let mut total = MultiTensorElement::zero(n);
    for k in 0..n {
        let block_coords = &coords[8 * k..8 * k + 8];
        let om = omega_multi(k, n)?;
        let phi_k = MultiTensorElement::from_multi_octonion(
            n,
            MultiOctonion::embed(n, k, Octonion::from_coords(block_coords)),
        );
        let omega_phi = om.product(&phi_k);
        for i in 0..8 {
            total = total.add(&Involution::new(i).apply_multi(&omega_phi));
        }
    }
    let reconstruction = total.scale(&one_eighth());
    Ok(reconstruction == MultiTensorElement::embed_vector(coords, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::reference::{
        HERMITIAN_TABLE_SIGNS, TWISTOR_TABLE_SIGNS, WITT_TABLE_SIGNS,
    };

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn sample_coords() -> Vec<Rational> {
        ["2", "-1/2", "3", "0", "5/3", "-7", "1", "4/9"].iter().map(|s| rat(s)).collect()
    }

    fn unit(m: usize) -> Vec<Rational> {
        (0..8).map(|i| if i == m { Rational::one() } else { Rational::zero() }).collect()
    }

    #[test]
    fn omega_structure() {
        let om = omega(0, 1).unwrap();
        assert_eq!(om.term_count(), 8);
        assert_eq!(om.coeff(Blade::generator(0)), Some(&Octonion::one()));
        for i in 1..8 {
            assert_eq!(om.coeff(Blade::generator(i)), Some(&(-&Octonion::basis(i))));
        }
        let om1 = omega(1, 2).unwrap();
        assert_eq!(om1.coeff(Blade::generator(8)), Some(&Octonion::one()));
        for i in 1..8 {
            assert_eq!(om1.coeff(Blade::generator(8 + i)), Some(&(-&Octonion::basis(i))));
        }
        assert!(matches!(omega(2, 2), Err(Error::BlockOutOfRange { k: 2, n: 2 })));
    }

    #[test]
    fn witt_table_matches_reference_signs() {
        let basis = WittBasis::new(1);
        assert_eq!(basis.f(0, 0), &omega(0, 1).unwrap());
        for j in 0..8 {
            let f = basis.f(0, j);
            assert_eq!(f.term_count(), 8, "f_{j} must have 8 terms");
            for i in 0..8 {
                let c = f.coeff(Blade::generator(i)).expect("single-generator term");
                let expect = if WITT_TABLE_SIGNS[j][i] > 0 {
                    Octonion::basis(i)
                } else {
                    -&Octonion::basis(i)
                };
                assert_eq!(c, &expect, "f_{j} coefficient at g_{i}");
            }
        }
    }

    #[test]
    fn witt_blocks_replicate_at_offset() {
        let n = 2;
        let basis = WittBasis::new(n);
        for k in 0..n {
            assert_eq!(basis.f(k, 0), &omega(k, n).unwrap());
            for j in 0..8 {
                for i in 0..8 {
                    let c = basis.f(k, j).coeff(Blade::generator(8 * k + i)).unwrap();
                    let expect = if WITT_TABLE_SIGNS[j][i] > 0 {
                        Octonion::basis(i)
                    } else {
                        -&Octonion::basis(i)
                    };
                    assert_eq!(c, &expect);
                }
            }
        }
    }

    #[test]
    fn twistor_table_matches_reference_signs() {
        // check columns via unit vectors: X = g_v contributes its sign at
        // slot m of X_i exactly when v = m⊕i
        for v in 0..8 {
            let frame = twistor_vectors(&unit(v));
            for i in 0..8 {
                for m in 0..8 {
                    let expect = if v == m ^ i {
                        Rational::from(TWISTOR_TABLE_SIGNS[i][m] as i64)
                    } else {
                        Rational::zero()
                    };
                    assert_eq!(frame.vector(i)[m], expect, "v={v} i={i} m={m}");
                }
            }
        }
    }

    #[test]
    fn twistor_basic_rows() {
        // X = g_0: X_0 = g_0, X_i = -g_i for i ≥ 1
        let frame = twistor_vectors(&unit(0));
        assert_eq!(frame.vector(0).as_slice(), unit(0).as_slice());
        for i in 1..8 {
            let mut expect: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
            expect[i] = Rational::from(-1);
            assert_eq!(frame.vector(i), &expect, "i={i}");
        }
        // X_0 = X always
        let coords = sample_coords();
        let frame = twistor_vectors(&coords);
        assert_eq!(frame.vector(0).as_slice(), coords.as_slice());
    }

    #[test]
    fn hermitian_frame_structure() {
        // X = g_0 gives Z_i = f_i
        let basis = WittBasis::new(1);
        let frame = hermitian_variables(&unit(0));
        for i in 0..8 {
            assert_eq!(frame.z(i), basis.f(0, i), "i={i}");
        }
        // zero vector gives zero frame
        let zero_frame = hermitian_variables(&vec![Rational::zero(); 8]);
        for i in 0..8 {
            assert!(zero_frame.z(i).is_zero());
        }
    }

    #[test]
    fn hermitian_matches_sign_table() {
        // Z_i = Σ_j s_i(j) e_j ⊗ X_j with the reference signs
        let coords = sample_coords();
        let frame = hermitian_variables(&coords);
        let tw = twistor_vectors(&coords);
        for i in 0..8 {
            let mut expect = TensorElement::zero(8);
            for j in 0..8 {
                let mut term = TensorElement::from_multivector(&tw.to_multivector(j))
                    .left_mul_oct(&Octonion::basis(j));
                if HERMITIAN_TABLE_SIGNS[i][j] < 0 {
                    term = term.neg();
                }
                expect = expect.add(&term);
            }
            assert_eq!(frame.z(i), &expect, "i={i}");
        }
    }

    #[test]
    fn z0_collects_the_twistor_vectors() {
        let coords = sample_coords();
        let frame = hermitian_variables(&coords);
        let tw = twistor_vectors(&coords);
        // Z_0 = Σ_j e_j ⊗ X_j, so component j of Z_0 is X_j
        for j in 0..8 {
            assert_eq!(frame.z(0).octonion_component(j), tw.to_multivector(j), "j={j}");
        }
    }

    #[test]
    fn round_trip_both_ways() {
        let coords = sample_coords();
        let tw = twistor_vectors(&coords);
        let herm = hermitian_variables(&coords);
        // hermitian built from the twistor frame agrees with the direct one
        assert_eq!(hermitian_from_twistor(&tw), herm);
        // and converting back recovers the twistor frame
        assert_eq!(twistor_from_hermitian(&herm).unwrap(), tw);
        // zero round trip
        let zero: Vec<Rational> = vec![Rational::zero(); 8];
        let tw0 = twistor_vectors(&zero);
        assert_eq!(twistor_from_hermitian(&hermitian_from_twistor(&tw0)).unwrap(), tw0);
    }

    #[test]
    fn round_trip_blocks() {
        let n = 2;
        let coords = sample_coords();
        for k in 0..n {
            let tw = twistor_vectors_block(&coords, k, n).unwrap();
            let herm = hermitian_variables_block(&coords, k, n).unwrap();
            assert_eq!(hermitian_from_twistor(&tw), herm, "k={k}");
            assert_eq!(twistor_from_hermitian(&herm).unwrap(), tw, "k={k}");
        }
    }

    #[test]
    fn generator_resolution() {
        for n in [1usize, 2] {
            let basis = WittBasis::new(n);
            for k in 0..n {
                for i in 0..8 {
                    let combo = express_generator(i, k, &basis).unwrap();
                    let mut expect = TensorElement::zero(8 * n);
                    expect.add_term(Blade::generator(8 * k + i), Octonion::one());
                    assert_eq!(combo, expect, "n={n} k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn decomposition_reconstructs() {
        // single block unit vector
        let d = witt_decompose(&unit(0), 1).unwrap();
        assert!(d.reconstruction_exact);
        // two blocks, generic coordinates
        let mut coords = sample_coords();
        coords.extend(["1/3", "2", "-5", "7/2", "0", "1", "-1/6", "9"].iter().map(|s| rat(s)));
        let d = witt_decompose(&coords, 2).unwrap();
        assert!(d.reconstruction_exact);
        assert_eq!(d.blocks.len(), 2);
        // zero vector gives zero frames
        let d = witt_decompose(&vec![Rational::zero(); 16], 2).unwrap();
        assert!(d.reconstruction_exact);
        for b in &d.blocks {
            for i in 0..8 {
                assert!(b.hermitian.z(i).is_zero());
            }
        }
        // wrong length errors
        assert!(witt_decompose(&coords[..7], 1).is_err());
    }

    #[test]
    fn anticommutation_on_samples() {
        let report = twistor_anticommutation(&unit(0)).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        let report = twistor_anticommutation(&sample_coords()).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        let report = twistor_anticommutation(&vec![Rational::zero(); 8]).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn anticommutation_unit_vector_values() {
        // X = g_0: X_1² = -1, X_1 X_2 + X_2 X_1 = 0
        let frame = twistor_vectors(&unit(0));
        let x1 = frame.to_multivector(1);
        let x2 = frame.to_multivector(2);
        assert_eq!(x1.product(&x1), Multivector::scalar(8, Rational::from(-1)));
        assert!(x1.product(&x2).add(&x2.product(&x1)).is_zero());
    }

    #[test]
    fn cross_block_anticommutators_vanish() {
        let n = 2;
        let mut coords = sample_coords();
        coords.extend(["1", "2", "3", "4", "5", "6", "7", "8"].iter().map(|s| rat(s)));
        let f0 = twistor_vectors_block(&coords[0..8], 0, n).unwrap();
        let f1 = twistor_vectors_block(&coords[8..16], 1, n).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let a = f0.to_multivector(i);
                let b = f1.to_multivector(j);
                assert!(a.product(&b).add(&b.product(&a)).is_zero(), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn multi_basis_slot_locality() {
        let n = 2;
        let basis = MultiWittBasis::new(n);
        for k in 0..n {
            for i in 0..8 {
                for (_, c) in basis.f(k, i).terms() {
                    for l in 0..n {
                        if l != k {
                            assert!(c.slot(l).is_zero(), "k={k} i={i} leaks into slot {l}");
                        }
                    }
                }
            }
        }
        // n = 1 collapses to the plain basis under the one-slot identification
        let multi = MultiWittBasis::new(1);
        let plain = WittBasis::new(1);
        for i in 0..8 {
            for (b, c) in multi.f(0, i).terms() {
                assert_eq!(Some(c.slot(0)), plain.f(0, i).coeff(*b));
            }
            assert_eq!(multi.f(0, i).term_count(), plain.f(0, i).term_count());
        }
    }

    #[test]
    fn multi_reconstruction() {
        let mut coords = sample_coords();
        coords.extend(["-2", "0", "1/7", "3", "4", "-5/2", "6", "1"].iter().map(|s| rat(s)));
        assert!(multi_witt_reconstruction(&coords[..8], 1).unwrap());
        assert!(multi_witt_reconstruction(&coords, 2).unwrap());
    }

    #[test]
    fn corrupt_frames_are_rejected() {
        // scalar-blade imaginary coefficients leave an imaginary residue
        let imaginary = HermitianFrame {
            n: 1,
            block: 0,
            z: std::array::from_fn(|_| {
                TensorElement::from_octonion(8, Octonion::basis(3))
            }),
        };
        assert!(matches!(twistor_from_hermitian(&imaginary), Err(Error::NotRealVector(_))));

        // grade-2 support cannot be read back as a vector
        let grade_two = HermitianFrame {
            n: 1,
            block: 0,
            z: std::array::from_fn(|_| {
                let mut t = TensorElement::zero(8);
                t.add_term(Blade::from_indices(&[0, 1]), Octonion::one());
                t
            }),
        };
        assert!(matches!(twistor_from_hermitian(&grade_two), Err(Error::NotRealVector(_))));

        // support outside the frame's block is rejected
        let out_of_block = HermitianFrame {
            n: 2,
            block: 0,
            z: std::array::from_fn(|_| {
                let mut t = TensorElement::zero(16);
                t.add_term(Blade::generator(8), Octonion::one());
                t
            }),
        };
        assert!(matches!(twistor_from_hermitian(&out_of_block), Err(Error::NotRealVector(_))));
    }
}
