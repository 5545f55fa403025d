//! Any byte string either fails to parse with an error or round-trips
//! through the canonical form: emit(parse(s)) must be a fixed point.

#![no_main]

use libfuzzer_sys::fuzz_target;
use pshp::instance::{emit_string, parse_str};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(inst) = parse_str(text) else { return };
    let canonical = emit_string(&inst);
    let reparsed = parse_str(&canonical).expect("canonical form parses");
    assert_eq!(
        emit_string(&reparsed),
        canonical,
        "canonical form is a fixed point"
    );
});
