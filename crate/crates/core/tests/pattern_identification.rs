//! Exhaustive confirmation of the vertex-level shapes of the L4-bar and kite patterns.

use mvrank::corpus::{all_graphs, unicyclic};
use mvrank::families::{book_structure, classify, necklace_cycles, Kind};
use mvrank::graph::{contains_induced, Pattern};
use mvrank::Graph;

fn same_shape(g: &Graph, p: Pattern) -> bool {
    g.order() == p.graph().order() && g.size() == p.graph().size() && contains_induced(g, p)
}

/// Opposite cycle vertices both of degree 2 would let the square collapse.
fn no_thin_diagonal(g: &Graph, c: &[usize]) -> bool {
    c.len() == 4 && (0..2).all(|i| g.degree(c[i]) > 2 || g.degree(c[i + 2]) > 2)
}

#[test]
fn l4bar_is_the_smallest_unicyclic_square_without_a_thin_diagonal() {
    let mut smallest = None;
    for n in 4..=8 {
        let hits: Vec<Graph> = unicyclic(n)
            .into_iter()
            .filter(|g| {
                let cycles = necklace_cycles(g).expect("unicyclic graphs are necklaces");
                no_thin_diagonal(g, &cycles[0])
            })
            .collect();
        if !hits.is_empty() && smallest.is_none() {
            smallest = Some(hits);
        }
    }
    let hits = smallest.expect("some order has one");
    assert_eq!(hits.len(), 1);
    assert!(same_shape(&hits[0], Pattern::L4Bar));
}

#[test]
fn l4bar_occurs_exactly_on_squares_with_adjacent_heavy_vertices() {
    for n in 4..=9 {
        for g in unicyclic(n) {
            let c = &necklace_cycles(&g).unwrap()[0];
            let expect =
                c.len() == 4 && (0..4).any(|i| g.degree(c[i]) > 2 && g.degree(c[(i + 1) % 4]) > 2);
            assert_eq!(contains_induced(&g, Pattern::L4Bar), expect, "{g}");
        }
    }
}

#[test]
fn kite_is_the_only_five_vertex_triangle_book_with_a_tree_complement() {
    let books: Vec<Graph> = all_graphs(5)
        .into_iter()
        .filter(|g| classify(g).kind == Kind::Book)
        .collect();
    // the house is the other tree-complement book; it has a square page
    let house: Vec<&Graph> = books
        .iter()
        .filter(|g| same_shape(g, Pattern::P5Bar))
        .collect();
    assert_eq!(house.len(), 1);
    let hits: Vec<Graph> = books
        .into_iter()
        .filter(|g| {
            book_structure(g)
                .unwrap()
                .pages
                .iter()
                .all(|p| p.len() == 1)
        })
        .filter(|g| {
            let c = g.complement();
            c.is_connected() && c.size() == c.order() - 1
        })
        .collect();
    assert_eq!(hits.len(), 1);
    assert!(same_shape(&hits[0], Pattern::Kite));
}

#[test]
fn kite_occurs_exactly_on_books_with_two_triangles_and_a_heavy_apex() {
    for n in 4..=7 {
        for g in all_graphs(n)
            .into_iter()
            .filter(|g| classify(g).kind == Kind::Book)
        {
            let b = book_structure(&g).unwrap();
            let apexes: Vec<usize> = b
                .pages
                .iter()
                .filter(|p| p.len() == 1)
                .map(|p| p[0])
                .collect();
            let expect = apexes.len() >= 2 && apexes.iter().any(|&a| g.degree(a) > 2);
            assert_eq!(contains_induced(&g, Pattern::Kite), expect, "{g}");
        }
    }
}
