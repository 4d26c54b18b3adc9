//! Throws arbitrary coordinate pairs at the classifier: it must reject or
//! classify but never panic, and points inside the triangle must rebuild
//! their symmetric state consistently.

#![no_main]

use ghzsym::geometry::{classify, x_bisep, x_edge, x_sep, x_w};
use ghzsym::statespace::TriangleCoords;
use ghzsym::twirl::{coords_of_density, symmetric_from_coords};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|pair: (f64, f64)| {
    let (x, y) = pair;
    let c = TriangleCoords::new(x, y);
    let _ = classify(c, 1e-9);
    let _ = x_sep(y);
    let _ = x_bisep(y);
    let _ = x_w(y);
    let _ = x_edge(y);

    if let Ok(rho) = symmetric_from_coords(c) {
        let back = coords_of_density(&rho);
        assert!((back.x - c.x).abs() <= 1e-12);
        assert!((back.y - c.y).abs() <= 1e-12);
    }
});
