#![no_main]

use libfuzzer_sys::fuzz_target;
use qga_cli::{cmd_decompose, cmd_observables, cmd_overlap, parse_state_spec};

// The document parser must return Ok or Err for any byte sequence, and a
// successfully parsed state must flow through every command without
// panicking (domain errors are fine).
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(spec) = parse_state_spec(text) else { return };
    let _ = cmd_decompose(&spec, false, true);
    let _ = cmd_decompose(&spec, true, true);
    let _ = cmd_observables(&spec, true, true);
    let _ = cmd_overlap(&spec, &spec, true, true);
});
