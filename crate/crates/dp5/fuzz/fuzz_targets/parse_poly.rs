//! Fuzz the polynomial expression parser: no panics, and every
//! accepted univariate input round-trips through printing.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 4096 {
        return;
    }
    let vars = ["x".to_string(), "y".to_string(), "z".to_string()];
    let _ = dp5::parse::parse_poly(text, &vars);
    if let Ok(p) = dp5::parse::parse_unipoly(text) {
        let printed = p.to_string();
        let again = dp5::parse::parse_unipoly(&printed).expect("printed form must re-parse");
        assert_eq!(p, again, "round-trip mismatch for {:?}", text);
    }
});
