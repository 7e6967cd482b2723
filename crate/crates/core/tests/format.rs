use b1_core::algebra::algebra_zoo;
use b1_core::enumerate::{lattices_up_to, posets};
use b1_core::format::{parse, write_algebra, write_module, write_monoid, write_poset, StructureFile};
use b1_core::monoid::monoid_zoo;

#[test]
fn written_structures_parse_back() {
    for m in lattices_up_to(6) {
        match parse(&write_module(&m)).unwrap() {
            StructureFile::Module(back) => assert_eq!(back, m),
            other => panic!("wrong kind {}", other.kind()),
        }
    }
    for a in algebra_zoo(4).unwrap() {
        match parse(&write_algebra(&a)).unwrap() {
            StructureFile::Algebra(back) => assert_eq!(back, a),
            other => panic!("wrong kind {}", other.kind()),
        }
    }
    for m in monoid_zoo(4).unwrap() {
        match parse(&write_monoid(&m)).unwrap() {
            StructureFile::Monoid(back) => assert_eq!(back, m),
            other => panic!("wrong kind {}", other.kind()),
        }
    }
    for p in posets(4) {
        match parse(&write_poset(&p)).unwrap() {
            StructureFile::Poset(back) => assert_eq!(back, p),
            other => panic!("wrong kind {}", other.kind()),
        }
    }
}

#[test]
fn invalid_tables_are_reported() {
    let text = "kind module\nnames 0 a\nsum\n0 a\na 0\n";
    assert!(parse(text).is_err());
}
