#![no_main]

use libfuzzer_sys::fuzz_target;
use vbraid::braiding::braid;
use vbraid::diagram::{gauss_from_morse, MorsePresentation};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(m) = MorsePresentation::from_json(text) else { return };
    if m.validate().is_err() || m.slices.len() > 40 {
        return;
    }
    let g = gauss_from_morse(&m).expect("valid diagrams trace");
    g.validate().expect("traced code is consistent");
    if m.count_classical() <= 6 {
        let _ = braid(&m);
    }
});
