//! Fuzz the parametrization JSON decoder: no panics, and every
//! accepted file re-encodes to a value that decodes identically.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 16 {
        return;
    }
    if let Ok(param) = dp5::cli::param_from_json(data) {
        let text = serde_json::to_string(&dp5::cli::param_to_json(&param)).unwrap();
        let again = dp5::cli::param_from_json(text.as_bytes()).expect("re-encode must decode");
        assert_eq!(again.forms, param.forms);
        assert_eq!(again.projection, param.projection);
        assert_eq!(again.base_point, param.base_point);
    }
});
