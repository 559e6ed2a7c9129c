//! Fuzz the surface JSON decoder: no panics, and every accepted file
//! re-encodes to a value that decodes to the same surface.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 16 {
        return;
    }
    if let Ok(surface) = dp5::cli::surface_from_json(data) {
        let text = serde_json::to_string(&dp5::cli::surface_to_json(&surface)).unwrap();
        let again = dp5::cli::surface_from_json(text.as_bytes()).expect("re-encode must decode");
        assert_eq!(again.quadrics, surface.quadrics);
    }
});
