#![no_main]

use kodag::cobweb::{parse_sequence_values, realizer, CobwebTruncation, LevelSequence};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(values) = parse_sequence_values(text) else {
        return;
    };
    assert!(values.iter().all(|&f| f >= 1));
    let levels = values.len() - 1;
    let seq = LevelSequence::custom(values).expect("parsed values are positive");
    if let Ok(t) = CobwebTruncation::with_budget(seq, levels, 64) {
        realizer(&t).expect("cobweb realizer verifies");
    }
});
