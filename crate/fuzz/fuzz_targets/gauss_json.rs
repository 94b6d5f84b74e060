#![no_main]

use libfuzzer_sys::fuzz_target;
use vbraid::diagram::{virtual_parity_between_components, GaussCode};
use vbraid::invariants::bracket_state_sum;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(g) = GaussCode::from_json(text) else { return };
    if g.validate().is_err() {
        return;
    }
    assert_eq!(GaussCode::from_json(&g.to_json()).unwrap(), g);
    let _ = virtual_parity_between_components(&g);
    if g.crossing_count() <= 10 {
        let _ = bracket_state_sum(&g);
    }
});
