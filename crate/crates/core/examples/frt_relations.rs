//! Entry relations of the quantum supergroup from `R M1 M2 = M2 M1 R`, their
//! rewriting system, and the printed relation blocks.

use twistlab::frtkit::{
    cross_check_block_relations, derive_rmm_relations, BlockMutation, FrtGen, NcPoly, RttSigns,
};
use twistlab::representations::{derive_fundamental_rep, r_matrix_exact};

fn main() -> twistlab::Result<()> {
    let r = r_matrix_exact(&derive_fundamental_rep()?)?;
    let rels = derive_rmm_relations(&r, RttSigns::Operator)?;
    println!("{} relations", rels.len());
    for rel in rels.relations.iter().take(8) {
        println!("  {rel}");
    }

    let sys = rels.rewrite_system();
    println!(
        "normal words: {} quadratic, {} cubic; {} overlaps, {} unresolved",
        sys.normal_words(2).len(),
        sys.normal_words(3).len(),
        sys.overlap_count(),
        sys.confluence_failures().len()
    );

    use FrtGen::*;
    let p = NcPoly::gens(&[B, E, Eta]);
    println!("b e eta -> {}", sys.nf(&p));

    for c in cross_check_block_relations(&rels, BlockMutation::None) {
        println!("{:<22} {}", c.name, c.status);
    }
    Ok(())
}
