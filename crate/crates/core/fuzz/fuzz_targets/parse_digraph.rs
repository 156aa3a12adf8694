#![no_main]

use kodag::format::{parse_digraph, write_digraph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(g) = parse_digraph(text) {
            let out = write_digraph(&g);
            assert_eq!(parse_digraph(&out).expect("written digraph parses"), g);
        }
    }
});
