use pintersect_core::graph6::emit_graph6;
use pintersect_core::patterns::split_pattern;

fn main() {
    for d in 3..=4 {
        let sp = split_pattern(d).unwrap();
        println!("d={d}: {}", emit_graph6(&sp.graph));
    }
}
