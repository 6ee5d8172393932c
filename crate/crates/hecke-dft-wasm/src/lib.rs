//! Browser bindings: three interactive views onto the deformed transform,
//! each returning a JSON payload for the demo page to plot.
//!
//! The payload builders are plain functions so they are testable on the
//! host; the `#[wasm_bindgen]` wrappers only shuttle strings.

use hecke_dft::transform::{KernelMatrix, Signal};
use hecke_dft::{LatticeConfig, SpectrumTable};
use serde_json::json;
use std::f64::consts::PI;
use wasm_bindgen::prelude::wasm_bindgen;

fn config(m: u32, tau: f64) -> Result<LatticeConfig, String> {
    LatticeConfig::new(m as i64, tau).map_err(|e| e.to_string())
}

fn kernel_for(cfg: &LatticeConfig) -> Result<(SpectrumTable, KernelMatrix), String> {
    let table = SpectrumTable::compute(cfg).map_err(|e| e.to_string())?;
    let kernel = KernelMatrix::from_spectrum(&table);
    Ok((table, kernel))
}

fn error_payload(msg: String) -> String {
    json!({ "error": msg }).to_string()
}

/// Spectral nodes, their cosine-limit references and the dual weights.
pub fn spectrum_payload(m: u32, tau: f64) -> Result<String, String> {
    let cfg = config(m, tau)?;
    let table = SpectrumTable::compute(&cfg).map_err(|e| e.to_string())?;
    let period = cfg.period() as f64;
    let points: Vec<_> = table
        .points()
        .iter()
        .map(|p| {
            json!({
                "m": p.m,
                "xi": p.xi,
                "cosine_node": p.m as f64 * PI / period,
                "epsilon": p.parity,
                "eigenvalue": p.eigenvalue,
                "delta_hat": p.dual_weight,
            })
        })
        .collect();
    Ok(json!({
        "M": cfg.period(),
        "tau": cfg.tau(),
        "points": points,
    })
    .to_string())
}

/// Kernel matrix with both weight vectors and its measured Gram deviations.
pub fn kernel_payload(m: u32, tau: f64) -> Result<String, String> {
    let cfg = config(m, tau)?;
    let (_, kernel) = kernel_for(&cfg)?;
    let size = kernel.size();
    let rows: Vec<Vec<f64>> = (0..size).map(|r| kernel.row(r).to_vec()).collect();
    let ortho = kernel.verify_orthogonality();
    Ok(json!({
        "M": cfg.period(),
        "tau": cfg.tau(),
        "phi": rows,
        "delta": kernel.delta(),
        "delta_hat": kernel.delta_hat(),
        "gram_row_deviation": ortho.row_deviation,
        "gram_col_deviation": ortho.col_deviation,
    })
    .to_string())
}

/// Forward transform of a real signal, its reconstruction, and the parity
/// split of its spectrum.
pub fn transform_payload(m: u32, tau: f64, signal_json: &str) -> Result<String, String> {
    let cfg = config(m, tau)?;
    let values: Vec<f64> =
        serde_json::from_str(signal_json).map_err(|e| format!("signal must be a JSON array of numbers: {e}"))?;
    if values.len() != cfg.alcove_size() {
        return Err(format!(
            "signal has {} values but M+1 = {} are required",
            values.len(),
            cfg.alcove_size()
        ));
    }
    let (_, kernel) = kernel_for(&cfg)?;
    let signal = Signal::from_real(&values);
    let fhat = kernel.forward(&signal).map_err(|e| e.to_string())?;
    let back = kernel.inverse(&fhat).map_err(|e| e.to_string())?;
    let roundtrip_error = back.max_dev(&signal);

    let (even, odd) = kernel.parity_split(&signal).map_err(|e| e.to_string())?;
    let even_hat = kernel.forward(&even).map_err(|e| e.to_string())?;
    let odd_hat = kernel.forward(&odd).map_err(|e| e.to_string())?;

    let re = |s: &Signal| -> Vec<f64> { s.values().iter().map(|v| v.re).collect() };
    Ok(json!({
        "M": cfg.period(),
        "tau": cfg.tau(),
        "input": values,
        "forward": re(&fhat),
        "reconstructed": re(&back),
        "roundtrip_error": roundtrip_error,
        "even_part": re(&even),
        "odd_part": re(&odd),
        "even_spectrum": re(&even_hat),
        "odd_spectrum": re(&odd_hat),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn spectrum(m: u32, tau: f64) -> String {
    spectrum_payload(m, tau).unwrap_or_else(error_payload)
}

#[wasm_bindgen]
pub fn kernel(m: u32, tau: f64) -> String {
    kernel_payload(m, tau).unwrap_or_else(error_payload)
}

#[wasm_bindgen]
pub fn transform(m: u32, tau: f64, signal_json: &str) -> String {
    transform_payload(m, tau, signal_json).unwrap_or_else(error_payload)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_payload_shape() {
        let text = spectrum_payload(4, 0.5).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["M"], 4);
        assert_eq!(v["points"].as_array().unwrap().len(), 5);
        let xi0 = v["points"][0]["xi"].as_f64().unwrap();
        assert!(xi0 > 0.0 && xi0 < PI);
    }

    #[test]
    fn kernel_payload_orthogonality() {
        let text = kernel_payload(6, 0.3).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(v["gram_row_deviation"].as_f64().unwrap() < 1e-10);
        assert_eq!(v["phi"].as_array().unwrap().len(), 7);
        // origin column
        for row in v["phi"].as_array().unwrap() {
            assert!((row[0].as_f64().unwrap() - 1.09).abs() < 1e-12);
        }
    }

    #[test]
    fn transform_payload_round_trip() {
        let text = transform_payload(4, 0.5, "[1, 0, 0.5, -0.25, 0]").unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(v["roundtrip_error"].as_f64().unwrap() < 1e-12);
        // parity spectra live on complementary mode sets
        let even = v["even_spectrum"].as_array().unwrap();
        let odd = v["odd_spectrum"].as_array().unwrap();
        for i in 0..even.len() {
            if i % 2 == 1 {
                assert!(even[i].as_f64().unwrap().abs() < 1e-10);
            } else {
                assert!(odd[i].as_f64().unwrap().abs() < 1e-10);
            }
        }
    }

    #[test]
    fn invalid_inputs_surface_as_errors() {
        assert!(spectrum_payload(1, 0.5).is_err());
        assert!(transform_payload(4, 0.5, "[1, 2]").is_err());
        assert!(transform_payload(4, 0.5, "not json").is_err());
        let wrapped = transform(4, 0.5, "[1, 2]");
        assert!(wrapped.contains("error"));
    }
}
