#![no_main]

use libfuzzer_sys::fuzz_target;
use vbraid::parse_word;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(w) = parse_word(text) {
        let printed = w.to_string();
        assert_eq!(parse_word(&printed).unwrap(), w);
        let _ = w.free_reduce();
        let _ = w.permutation();
    }
});
