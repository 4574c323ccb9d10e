//! Second, independent transcription of the stored universal polynomials in
//! their factored form, compared against the canonical table file.

use charclass::algebra::{parse_polynomial, ParseOptions};
use charclass::tables::{entries, ClassName};

mod common;

use common::FACTORED;

#[test]
fn factored_forms_match_table() {
    assert_eq!(FACTORED.len(), entries().len());
    for &(name, kappa, text) in FACTORED {
        let name: ClassName = name.parse().unwrap();
        let expected = parse_polynomial(text, &ParseOptions::universal(kappa)).unwrap();
        let stored = entries()
            .iter()
            .find(|e| e.name == name && e.kappa == kappa)
            .unwrap_or_else(|| panic!("{name} missing"));
        assert_eq!(stored.body, expected, "{name}@kappa={kappa}");
    }
}
