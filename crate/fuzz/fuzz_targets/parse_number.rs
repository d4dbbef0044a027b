//! The number parsers accept only canonical spellings, so anything they
//! accept must reproduce the input byte-for-byte when formatted back.

#![no_main]

use libfuzzer_sys::fuzz_target;
use severi::arith::{format_int, format_rat, parse_int, parse_rat};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(n) = parse_int(s) {
        assert_eq!(format_int(&n), s);
    }
    if let Ok(q) = parse_rat(s) {
        assert_eq!(format_rat(&q), s);
    }
});
