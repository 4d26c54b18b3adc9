//! JSON wire format for 8x8 density matrices.
//!
//! Layout: `{"dim": 8, "re": [[...8 rows of 8...]], "im": [[...]]}` with
//! row-major entries in the computational basis (qubit 1 = most significant
//! bit). Writing uses 17 significant digits so every f64 round-trips
//! exactly.

use crate::statespace::{DensityMatrix8, Matrix8, StateError, C64};
use serde::{Deserialize, Serialize};
use std::io;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    /// The bytes are not the expected JSON shape (syntax, wrong dimensions,
    /// missing fields, non-finite numbers).
    #[error("malformed density-matrix JSON: {0}")]
    Format(String),
    /// The numbers decode fine but violate a density-matrix invariant.
    #[error(transparent)]
    Invariant(#[from] StateError),
}

#[derive(Deserialize)]
struct WireIn {
    dim: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

#[derive(Serialize)]
struct WireOut {
    dim: usize,
    re: [[f64; 8]; 8],
    im: [[f64; 8]; 8],
}

fn wire_to_density(w: WireIn) -> Result<DensityMatrix8, JsonError> {
    if w.dim != 8 {
        return Err(JsonError::Format(format!("dim must be 8, got {}", w.dim)));
    }
    for (name, part) in [("re", &w.re), ("im", &w.im)] {
        if part.len() != 8 {
            return Err(JsonError::Format(format!(
                "{name} must have 8 rows, got {}",
                part.len()
            )));
        }
        for (i, row) in part.iter().enumerate() {
            if row.len() != 8 {
                return Err(JsonError::Format(format!(
                    "{name} row {i} must have 8 entries, got {}",
                    row.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(JsonError::Format(format!("{name}[{i}][{j}] is not finite")));
                }
            }
        }
    }
    let m = Matrix8::from_fn(|i, j| C64::new(w.re[i][j], w.im[i][j]));
    Ok(DensityMatrix8::new(m)?)
}

pub fn density_from_json_str(s: &str) -> Result<DensityMatrix8, JsonError> {
    let w: WireIn = serde_json::from_str(s).map_err(|e| JsonError::Format(e.to_string()))?;
    wire_to_density(w)
}

pub fn density_from_json_bytes(b: &[u8]) -> Result<DensityMatrix8, JsonError> {
    let w: WireIn = serde_json::from_slice(b).map_err(|e| JsonError::Format(e.to_string()))?;
    wire_to_density(w)
}

/// Emits every float as `d.dddddddddddddddde[-]d`: 17 significant digits,
/// enough to reconstruct the exact bit pattern on parse.
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes any value to JSON with every float at 17 significant digits.
pub fn to_json_string_17<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("serializing to memory cannot fail");
    String::from_utf8(out).expect("the serializer emits UTF-8")
}

pub fn density_to_json_string(rho: &DensityMatrix8) -> String {
    let mut re = [[0.0; 8]; 8];
    let mut im = [[0.0; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let e = rho.entry(i, j);
            re[i][j] = e.re;
            im[i][j] = e.im;
        }
    }
    to_json_string_17(&WireOut { dim: 8, re, im })
}
