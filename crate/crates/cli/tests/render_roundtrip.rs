use proptest::prelude::*;
use uniflag_cli::{parse, render};
use uniflag_core::{CartanType, DynkinDiagram, Tag};

fn types(max: usize) -> impl Strategy<Value = CartanType> {
    proptest::sample::select(CartanType::all_up_to(max))
}

fn tagged(g: DynkinDiagram) -> impl Strategy<Value = (DynkinDiagram, Tag)> {
    let n = g.rank();
    let values = prop_oneof![4 => 0u32..4, 1 => 0u32..1000];
    (
        Just(g),
        proptest::collection::vec(values, n).prop_map(Tag::new),
    )
}

#[test]
fn every_connected_type_round_trips() {
    for t in CartanType::all_up_to(8) {
        let g = DynkinDiagram::connected(t);
        let tag = Tag::new((0..t.rank as u32).collect());
        assert_eq!(parse(render(&g, &tag).as_str()).unwrap(), (g, tag), "{t}");
    }
}

proptest! {
    #[test]
    fn connected_round_trip((g, tag) in types(8).prop_map(DynkinDiagram::connected).prop_flat_map(tagged)) {
        let pic = render(&g, &tag);
        prop_assert_eq!(parse(pic.as_str()).unwrap(), (g, tag));
    }

    #[test]
    fn disjoint_union_round_trip(
        (g, tag) in proptest::collection::vec(types(8), 1..4)
            .prop_map(|ts| DynkinDiagram::from_types(&ts).unwrap())
            .prop_flat_map(tagged)
    ) {
        let pic = render(&g, &tag);
        prop_assert_eq!(parse(pic.as_str()).unwrap(), (g, tag));
    }

    #[test]
    fn relabelled_subdiagrams_round_trip(t in types(8), bits in any::<u64>(), seed in 0u32..5) {
        let g = DynkinDiagram::connected(t);
        let set = uniflag_core::NodeSet::from_bits(bits).intersection(g.nodes());
        let sub = g.subdiagram(set).unwrap().diagram;
        let tag = Tag::new((0..sub.rank() as u32).map(|i| (i * 7 + seed) % 11).collect());
        prop_assert_eq!(parse(render(&sub, &tag).as_str()).unwrap(), (sub, tag));
    }
}
