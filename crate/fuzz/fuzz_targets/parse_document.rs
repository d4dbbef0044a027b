//! Any JSON the document parser accepts must survive a serialize/re-parse
//! cycle unchanged, and both plain-text renderings must not panic.

#![no_main]

use libfuzzer_sys::fuzz_target;
use severi::document::OutputDocument;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = OutputDocument::from_json(s) {
        let reparsed = OutputDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(doc, reparsed);
        let _ = doc.to_text();
        let _ = doc.to_csv();
    }
});
