use proptest::prelude::*;

use seqcm_cli::builtins;
use seqcm_cli::commands::{exit, CliError};
use seqcm_cli::document::parse_ideal;

/// Random document text: generators as exponent vectors, written with
/// assorted spacing, powers and comments.
fn document_text() -> impl Strategy<Value = String> {
    (0usize..=3, 0usize..=3)
        .prop_filter("nonempty ring", |(m, n)| m + n > 0)
        .prop_flat_map(|(m, n)| {
            let gens = prop::collection::vec(prop::collection::vec(0u32..=3, m + n), 0..5);
            (Just((m, n)), gens, any::<bool>(), prop::collection::vec(prop::sample::select(vec![0u32, 2, 3, 5]), 0..3))
        })
        .prop_map(|((m, n), gens, named, chars)| {
            let mut text = format!("# random\nring {m} {n}\n");
            if named {
                text.push_str("name sample\n");
            }
            if !chars.is_empty() {
                text.push_str(&format!("char {}\n", chars.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")));
            }
            for g in gens {
                let factors: Vec<String> = g
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| {
                        let name = if v < m { format!("x{}", v + 1) } else { format!("y{}", v - m + 1) };
                        if e == 1 { name } else { format!("{name}^{e}") }
                    })
                    .collect();
                let body = if factors.is_empty() { "1".to_string() } else { factors.join("  ") };
                text.push_str(&format!("gen {body}   # generator\n"));
            }
            text
        })
}

proptest! {
    #[test]
    fn canonical_text_is_a_fixed_point(text in document_text()) {
        let doc = parse_ideal(&text).unwrap();
        let canonical = doc.to_text();
        let reparsed = parse_ideal(&canonical).unwrap();
        prop_assert_eq!(&reparsed, &doc);
        prop_assert_eq!(reparsed.to_text(), canonical);
    }

    #[test]
    fn parsing_never_panics(text in "[ -~\n]{0,80}") {
        let _ = parse_ideal(&text);
    }
}

#[test]
fn builtins_parse_with_the_expected_sizes() {
    let sizes: Vec<(&str, usize, bool)> = builtins::NAMES
        .iter()
        .map(|&n| {
            let doc = parse_ideal(builtins::text(n).unwrap()).unwrap();
            (n, doc.generators().len(), doc.is_squarefree())
        })
        .collect();
    assert_eq!(sizes, [("rp2", 10, true), ("moebius", 6, true), ("product", 4, false)]);
    assert!(builtins::text("nope").is_none());
}

#[test]
fn engine_errors_map_to_exit_codes() {
    use seqcm::Error;
    let code = |e: Error| CliError::Engine(e).exit_code();
    assert_eq!(code(Error::Internal("x".into())), exit::INTERNAL);
    assert_eq!(code(Error::Declined("x".into())), exit::DECLINED);
    assert_eq!(code(Error::NotSquarefree), exit::DECLINED);
    assert_eq!(code(Error::NoProperDecomposition("the zero ideal")), exit::DECLINED);
    assert_eq!(code(Error::UnsupportedField(4)), exit::INPUT);
    assert_eq!(code(Error::RingMismatch), exit::INPUT);
    assert_eq!(CliError::UnknownInput("x".into()).exit_code(), exit::INPUT);
}
