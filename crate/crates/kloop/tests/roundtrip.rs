use kloop::{parse_subset, parse_table, serialize_subset, serialize_table};
use kloop_core::{CayleyTable, SubsetMask};
use proptest::prelude::*;

fn table() -> impl Strategy<Value = CayleyTable> {
    (1usize..12).prop_flat_map(|n| {
        prop::collection::vec(0..n, n * n).prop_map(move |v| CayleyTable::new(n, v).unwrap())
    })
}

/// Whitespace runs, optionally carrying a comment that ends the line.
fn separator() -> impl Strategy<Value = String> {
    prop_oneof![
        Just(" ".to_owned()),
        Just("\t".to_owned()),
        Just("\n".to_owned()),
        Just("  \r\n".to_owned()),
        "[a-z ]{0,12}".prop_map(|c| format!(" # {c}\n")),
    ]
}

proptest! {
    #[test]
    fn serialize_then_parse(t in table()) {
        prop_assert_eq!(parse_table(&serialize_table(&t)).unwrap(), t);
    }

    #[test]
    fn layout_does_not_matter(t in table(), seps in prop::collection::vec(separator(), 145)) {
        let text = serialize_table(&t);
        let mut mangled = String::new();
        for (i, tok) in text.split_whitespace().enumerate() {
            mangled.push_str(&seps[i % seps.len()]);
            mangled.push_str(tok);
        }
        mangled.push_str(&seps[0]);
        prop_assert_eq!(parse_table(&mangled).unwrap(), t);
    }

    #[test]
    fn subsets_round_trip(n in 1usize..100, bits in prop::collection::vec(any::<bool>(), 100)) {
        let s = SubsetMask::from_elements(n, (0..n).filter(|&i| bits[i]));
        prop_assert_eq!(parse_subset(&serialize_subset(&s), n).unwrap(), s);
    }

    #[test]
    fn truncated_tables_are_rejected(t in table()) {
        let text = serialize_table(&t);
        let cut = text.rfind(char::is_whitespace).unwrap();
        prop_assert!(parse_table(&text[..cut]).is_err());
    }
}
