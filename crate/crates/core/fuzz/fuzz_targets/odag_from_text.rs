#![no_main]

use kodag::digraph::{chain_intersection, hasse_from_relation, is_odag};
use kodag::format::parse_digraph;
use libfuzzer_sys::fuzz_target;

const BOUND: usize = 7;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = parse_digraph(text) else {
        return;
    };
    if g.vertex_count() > BOUND {
        return;
    }
    let result = is_odag(&g, BOUND).expect("no consistency failure within the bound");
    if result.representable {
        let x = result.witness_x.expect("witness x");
        let y = result.witness_y.expect("witness y");
        let r = chain_intersection(&x, &y).unwrap();
        assert_eq!(hasse_from_relation(&r).unwrap(), g);
    }
});
