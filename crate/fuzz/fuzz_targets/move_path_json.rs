#![no_main]

use libfuzzer_sys::fuzz_target;
use vbraid::moves::MovePath;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = MovePath::from_json(text) {
        p.validate().expect("from_json validates");
        let _ = p.reversed();
    }
});
