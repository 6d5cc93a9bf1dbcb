use k3lab::lattices::*;
fn main() {
    for j in 0..4 {
        match embed_ns_in_k3(j, 2).or_else(|| embed_ns_in_k3(j, 3)) {
            None => println!("family {j}: no embedding found"),
            Some(e) => {
                let c = orthogonal_complement(&e, &k3_form()).unwrap();
                println!("family {j}: complement rank {}", c.nrows());
                for i in 0..c.nrows() {
                    let row: Vec<String> = (0..c.ncols()).map(|k| c.at(i, k).to_string()).collect();
                    println!("  {:?}", row);
                }
                match congruence_search(&c, &transcendental_form(j), 3) {
                    None => println!("  no congruence at bound 3"),
                    Some(_) => println!("  congruent to A{j}"),
                }
            }
        }
    }
}
