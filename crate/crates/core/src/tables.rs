//! Deterministic renderers for the algebra tables exposed by the CLI.
//!
//! Text mode prints rows the way the tables are usually written out, with
//! formal coordinates `x0..x7`; JSON mode emits the underlying sign (and
//! index) matrices.

use serde_json::json;

use crate::error::{Error, Result};
use crate::involutions::{sigma_table, Involution};
use crate::octonion::{basis_mul, Octonion, FANO_TRIPLES};
use crate::witt::WittBasis;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableKind {
    Fano,
    OctonionMul,
    Sigma,
    JSigns,
    Witt,
    Twistor,
    Hermitian,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableFormat {
    Text,
    Json,
}

/// Renders a table; `n` selects the block count where it applies (the Witt
/// table), other kinds are block patterns independent of `n`.
pub fn render(kind: TableKind, n: usize, format: TableFormat) -> Result<String> {
    if !(1..=8).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "block count {n} out of range 1..=8 (blades hold at most 64 generators)"
        )));
    }
    let out = match (kind, format) {
        (TableKind::Fano, TableFormat::Text) => fano_text(),
        (TableKind::Fano, TableFormat::Json) => pretty(json!({ "triples": FANO_TRIPLES })),
        (TableKind::OctonionMul, TableFormat::Text) => octonion_mul_text(),
        (TableKind::OctonionMul, TableFormat::Json) => {
            let (sign, index) = octonion_mul_matrices();
            pretty(json!({ "sign": sign, "index": index }))
        }
        (TableKind::Sigma, TableFormat::Text) => {
            grid_text(&sigma_table().map(|row| row.map(|v| v.to_string())))
        }
        (TableKind::Sigma, TableFormat::Json) => pretty(json!({ "sigma": sigma_table() })),
        (TableKind::JSigns, TableFormat::Text) => {
            grid_text(&jsign_matrix().map(|row| row.map(|v| format!("{v:+}"))))
        }
        (TableKind::JSigns, TableFormat::Json) => pretty(json!({ "jsigns": jsign_matrix() })),
        (TableKind::Witt, TableFormat::Text) => witt_text(n),
        (TableKind::Witt, TableFormat::Json) => {
            let blocks: Vec<_> = (0..n)
                .map(|k| json!({ "block": k, "signs": witt_sign_matrix(n, k) }))
                .collect();
            pretty(json!({ "n": n, "blocks": blocks }))
        }
        (TableKind::Twistor, TableFormat::Text) => twistor_text(),
        (TableKind::Twistor, TableFormat::Json) => {
            let (signs, vars) = twistor_matrices();
            pretty(json!({ "signs": signs, "vars": vars }))
        }
        (TableKind::Hermitian, TableFormat::Text) => hermitian_text(),
        (TableKind::Hermitian, TableFormat::Json) => {
            pretty(json!({ "signs": hermitian_sign_matrix() }))
        }
    };
    Ok(out)
}

fn pretty(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("tables serialize");
    s.push('\n');
    s
}

fn grid_text(rows: &[[String; 8]; 8]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Joins signed terms as `a + b - c`, omitting a leading plus.
fn signed_terms(terms: &[(i8, String)]) -> String {
    let mut out = String::new();
    for (idx, (sign, body)) in terms.iter().enumerate() {
        if idx == 0 {
            if *sign < 0 {
                out.push('-');
            }
        } else if *sign < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(body);
    }
    out
}

fn fano_text() -> String {
    let mut out = String::new();
    for [a, b, c] in FANO_TRIPLES {
        out.push_str(&format!("e{a} e{b} = e{c}\n"));
    }
    out
}

fn octonion_mul_matrices() -> ([[i8; 8]; 8], [[usize; 8]; 8]) {
    let mut sign = [[0i8; 8]; 8];
    let mut index = [[0usize; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let (s, k) = basis_mul(i, j);
            sign[i][j] = s;
            index[i][j] = k;
        }
    }
    (sign, index)
}

fn octonion_mul_text() -> String {
    let (sign, index) = octonion_mul_matrices();
    let rows: [[String; 8]; 8] = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let s = if sign[i][j] > 0 { '+' } else { '-' };
            format!("{s}e{}", index[i][j])
        })
    });
    grid_text(&rows)
}

fn jsign_matrix() -> [[i8; 8]; 8] {
    std::array::from_fn(|j| std::array::from_fn(|i| Involution::new(j).basis_sign(i)))
}

fn basis_coeff_sign(c: &Octonion, i: usize) -> i8 {
    if c == &Octonion::basis(i) {
        1
    } else if c == &(-&Octonion::basis(i)) {
        -1
    } else {
        panic!("coefficient is not ±e{i}: {c}")
    }
}

fn witt_sign_matrix(n: usize, k: usize) -> [[i8; 8]; 8] {
    let basis = WittBasis::new(n);
    std::array::from_fn(|j| {
        std::array::from_fn(|i| {
            let c = basis
                .f(k, j)
                .coeff(crate::clifford::Blade::generator(8 * k + i))
                .expect("single-generator term");
            basis_coeff_sign(c, i)
        })
    })
}

fn witt_text(n: usize) -> String {
    let mut out = String::new();
    for k in 0..n {
        let signs = witt_sign_matrix(n, k);
        for (j, row) in signs.iter().enumerate() {
            let terms: Vec<(i8, String)> = row
                .iter()
                .enumerate()
                .map(|(i, &s)| (s, format!("e{i} g{}", 8 * k + i)))
                .collect();
            let label = if n == 1 { format!("f{j}") } else { format!("f{j}^{k}") };
            out.push_str(&format!("{label} = {}\n", signed_terms(&terms)));
        }
    }
    out
}

/// Twistor table as matrices: at slot `g_m` of row `i` sits
/// `signs[i][m] · x_{vars[i][m]}`.
fn twistor_matrices() -> ([[i8; 8]; 8], [[usize; 8]; 8]) {
    let mut signs = [[0i8; 8]; 8];
    let mut vars = [[0usize; 8]; 8];
    for i in 0..8 {
        let ei_conj = Octonion::basis(i).conj();
        for j in 0..8 {
            let o = &Octonion::basis(j) * &ei_conj;
            for m in 0..8 {
                let c = o.coeff(m);
                if c.is_zero() {
                    continue;
                }
                vars[i][m] = j;
                signs[i][m] = if c.is_negative() { -1 } else { 1 };
            }
        }
    }
    (signs, vars)
}

fn twistor_text() -> String {
    let (signs, vars) = twistor_matrices();
    let mut out = String::new();
    for i in 0..8 {
        let terms: Vec<(i8, String)> = (0..8)
            .map(|m| (signs[i][m], format!("x{} g{m}", vars[i][m])))
            .collect();
        out.push_str(&format!("X{i} = {}\n", signed_terms(&terms)));
    }
    out
}

fn hermitian_sign_matrix() -> [[i8; 8]; 8] {
    std::array::from_fn(|i| std::array::from_fn(|j| Involution::new(i).basis_sign(j)))
}

fn hermitian_text() -> String {
    let signs = hermitian_sign_matrix();
    let mut out = String::new();
    for i in 0..8 {
        let terms: Vec<(i8, String)> =
            (0..8).map(|j| (signs[i][j], format!("e{j} X{j}"))).collect();
        out.push_str(&format!("Z{i} = {}\n", signed_terms(&terms)));
    }
    out
}
