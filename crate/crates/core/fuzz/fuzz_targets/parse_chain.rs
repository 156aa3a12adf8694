#![no_main]

use kodag::format::{parse_chain, write_chain};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(c) = parse_chain(text) {
            assert_eq!(parse_chain(&write_chain(&c)).expect("written chain parses"), c);
        }
    }
});
