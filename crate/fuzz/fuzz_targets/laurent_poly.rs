#![no_main]

use libfuzzer_sys::fuzz_target;
use vbraid::invariants::LaurentPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = LaurentPoly::parse(text) else { return };
    let back = LaurentPoly::parse(&p.to_string()).unwrap();
    assert_eq!(back, p);
    let _ = &p * &p;
});
