//! `gen` subcommand: family name plus integer parameters to labeled graphs.

use packcrit::corpus::{all_graphs, connected_graphs_up_to, CORPUS_LIMIT};
use packcrit::exec::Execution;
use packcrit::families::{
    caterpillar, enumerate_block_graphs_diam2, enumerate_block_graphs_diam3, enumerate_caterpillars, enumerate_class_c,
    enumerate_trees, gen_basic, gen_class_c, gen_decorated_c4, gen_decorated_c8, gen_net, gen_realization,
    gen_sharpness_family, BasicKind, LabeledGraph,
};

use crate::Failure;

pub const FAMILIES: &[&str] = &[
    "path N",
    "cycle N",
    "complete N",
    "star R",
    "sharpness N",
    "realization K N",
    "decorated-c4",
    "net",
    "decorated-c8",
    "class-c L C1 .. CL",
    "caterpillar C1 .. CS",
    "trees N",
    "caterpillars N",
    "block-diam2 MAX_N",
    "block-diam3 MAX_N",
    "class-c-all MAX_CYCLE MAX_LEAVES",
    "graphs N",
    "connected MAX_N",
];

fn arity(family: &str, params: &[usize], want: usize) -> Result<(), Failure> {
    if params.len() == want {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "{family} takes {want} parameter(s), got {}",
            params.len()
        )))
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn plain(graphs: Vec<packcrit::Graph>) -> Vec<LabeledGraph> {
    graphs.into_iter().map(LabeledGraph::unlabeled).collect()
}

pub fn generate(family: &str, params: &[usize]) -> Result<Vec<LabeledGraph>, Failure> {
    let one = |lg: LabeledGraph| vec![lg];
    Ok(match family {
        "path" | "cycle" | "complete" | "star" => {
            arity(family, params, 1)?;
            let kind: BasicKind = family.parse().map_err(usage)?;
            one(gen_basic(kind, params[0]).map_err(usage)?)
        }
        "sharpness" => {
            arity(family, params, 1)?;
            one(gen_sharpness_family(params[0]).map_err(usage)?)
        }
        "realization" => {
            arity(family, params, 2)?;
            one(gen_realization(params[0], params[1]).map_err(usage)?)
        }
        "decorated-c4" => {
            arity(family, params, 0)?;
            one(gen_decorated_c4())
        }
        "net" => {
            arity(family, params, 0)?;
            one(gen_net())
        }
        "decorated-c8" => {
            arity(family, params, 0)?;
            one(gen_decorated_c8())
        }
        "class-c" => {
            let (&len, counts) = params.split_first().ok_or_else(|| {
                Failure::Usage("class-c takes the cycle length then one leaf count per cycle vertex".into())
            })?;
            one(gen_class_c(len, counts).map_err(usage)?)
        }
        "caterpillar" => {
            if params.is_empty() {
                return Err(Failure::Usage(
                    "caterpillar takes one leaf count per spine vertex".into(),
                ));
            }
            one(LabeledGraph::unlabeled(caterpillar(params)))
        }
        "trees" => {
            arity(family, params, 1)?;
            plain(enumerate_trees(params[0]).map_err(usage)?)
        }
        "caterpillars" => {
            arity(family, params, 1)?;
            plain(enumerate_caterpillars(params[0]).map_err(usage)?)
        }
        "block-diam2" => {
            arity(family, params, 1)?;
            enumerate_block_graphs_diam2(params[0])
        }
        "block-diam3" => {
            arity(family, params, 1)?;
            enumerate_block_graphs_diam3(params[0]).map_err(usage)?
        }
        "class-c-all" => {
            arity(family, params, 2)?;
            enumerate_class_c(params[0], params[1])
        }
        "graphs" | "connected" => {
            arity(family, params, 1)?;
            if params[0] > CORPUS_LIMIT {
                return Err(Failure::Usage(format!("{family}: order limit is {CORPUS_LIMIT}")));
            }
            if family == "graphs" {
                plain(all_graphs(params[0], Execution::Parallel))
            } else {
                plain(connected_graphs_up_to(params[0], Execution::Parallel))
            }
        }
        _ => {
            return Err(Failure::Usage(format!(
                "unknown family {family:?}; known families:\n  {}",
                FAMILIES.join("\n  ")
            )))
        }
    })
}
