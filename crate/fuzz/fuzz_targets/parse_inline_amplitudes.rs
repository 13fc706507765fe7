#![no_main]

use libfuzzer_sys::fuzz_target;
use qga_cli::{cmd_decompose, parse_inline_amplitudes};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(spec) = parse_inline_amplitudes(text) else { return };
    let _ = cmd_decompose(&spec, true, true);
});
