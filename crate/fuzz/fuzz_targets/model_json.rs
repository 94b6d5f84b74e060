#![no_main]

use libfuzzer_sys::fuzz_target;
use vbraid::invariants::{check_model, RMatrixModel};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(m) = RMatrixModel::from_json(text) else { return };
    if m.d <= 3 {
        let _ = check_model(&m);
    }
    assert_eq!(RMatrixModel::from_json(&m.to_json()).unwrap(), m);
});
