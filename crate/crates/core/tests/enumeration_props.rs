use metric_betweenness::enumeration::{
    connected_labeled_graphs, enumerate_representations, enumerate_representations_unpruned, survey, SearchOptions,
};
use metric_betweenness::structure::adjacency_graph;
use metric_betweenness::Graph;

#[test]
fn pruned_search_matches_the_full_sweep_up_to_4() {
    for n in 1..=4 {
        for g in connected_labeled_graphs(n).unwrap() {
            let pruned = enumerate_representations(&g).unwrap();
            let full = enumerate_representations_unpruned(&g).unwrap();
            assert_eq!(pruned.representations(), full.representations(), "{g:?}");
        }
    }
}

#[test]
fn report_invariants_up_to_4() {
    let rows = survey(4, SearchOptions::default()).unwrap();
    assert_eq!(rows.len(), 1 + 1 + 4 + 38);
    let mut below_only = Vec::new();
    for s in &rows {
        let r = &s.report;
        assert!(r.contains_graphic());
        assert_eq!(r.is_uniquely_representable(), r.bounds_below() && r.bounds_above());
        assert_eq!(r.bounds_above(), r.count() == 1);
        for b in r.representations() {
            assert_eq!(&adjacency_graph(b), r.graph());
        }
        if r.bounds_below() && r.count() > 1 {
            below_only.push(r.graph().clone());
        }
    }
    assert!(below_only.contains(&Graph::cycle(4)));
}
