#![no_main]

use kodag::cobweb::{CobwebTruncation, SequenceSpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(SequenceSpec::Builtin(seq)) = text.parse::<SequenceSpec>() {
            let _ = CobwebTruncation::with_budget(seq, 16, 4096);
        }
    }
});
