//! Feeds arbitrary bytes to the density-matrix JSON decoder. Accepted
//! inputs must satisfy the library's geometric guarantees and round-trip
//! bit-exactly through the writer.

#![no_main]

use ghzsym::geometry::classify;
use ghzsym::json::{density_from_json_bytes, density_to_json_string};
use ghzsym::twirl::{coords_of_density, twirl};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(rho) = density_from_json_bytes(data) else {
        return;
    };

    // validated states sit inside the triangle up to the validation slack
    let c = coords_of_density(&rho);
    assert!(c.is_inside(1e-8), "coords {c:?} escape the triangle");
    classify(c, 1e-8).expect("states inside the triangle classify");

    // the twirl projection preserves the coordinates bit for bit
    let t = twirl(&rho);
    let tc = coords_of_density(&t);
    assert_eq!(tc.x.to_bits(), c.x.to_bits());
    assert_eq!(tc.y.to_bits(), c.y.to_bits());

    // writer output reparses to the identical matrix
    let reparsed = ghzsym::json::density_from_json_str(&density_to_json_string(&rho))
        .expect("writer output is valid");
    assert_eq!(reparsed.matrix(), rho.matrix());
});
