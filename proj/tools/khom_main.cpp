// Command-line interface: compute the equivariant K-homology report of a
// reflection-group polyhedron, validate inputs, run the standalone minor
// checker, and run the built-in corpus.

#include <CLI11.hpp>

#include "khom/corpus.hpp"
#include "khom/kreport.hpp"
#include "khom/polyhedron.hpp"
#include "khom/torsion.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace khom;

struct ComputeArgs {
    std::string file;
    std::string format = "text";
    std::string basis = "transformed";
    std::string dump_dir;
    bool skip_criterion = false;
};

void dump_matrices(const ChainComplex& chain, const std::string& dir) {
    std::filesystem::create_directories(dir);
    const IntMatrix* mats[3] = {&chain.d1, &chain.d2, &chain.d3};
    const char* names[3] = {"d1.txt", "d2.txt", "d3.txt"};
    for (int i = 0; i < 3; ++i) {
        std::ofstream out(std::filesystem::path(dir) / names[i]);
        mats[i]->write_triplets(out);
    }
}

int run_compute(const CoxeterMatrix& cm, const ComputeArgs& args) {
    ComputeOptions opts;
    opts.basis = args.basis == "standard" ? BasisKind::Standard
                                          : BasisKind::Transformed;
    opts.run_criterion = !args.skip_criterion;
    KReport rep = compute_report(cm, opts);
    if (!args.dump_dir.empty()) dump_matrices(rep.chain, args.dump_dir);
    if (args.format == "structured")
        std::cout << render_structured(rep);
    else
        std::cout << render_text(rep);
    return rep.all_flags() ? 0 : 1;
}

int run_minor_check(const std::vector<IntMatrix>& blocks) {
    MinorReport rep = check_block_system(blocks);
    std::cout << "reduced size: " << rep.reduced_rows << " x "
              << rep.reduced_cols << "\n";
    if (rep.ok) {
        std::cout << "all minors in {-1, 0, 1} (checked up to size "
                  << rep.max_size_checked << ")\n";
        return 0;
    }
    std::cout << "FAIL: minor with determinant " << rep.witness_det
              << " at reduced rows (";
    for (std::size_t i = 0; i < rep.witness_rows.size(); ++i)
        std::cout << (i ? "," : "") << rep.witness_rows[i];
    std::cout << "), cols (";
    for (std::size_t i = 0; i < rep.witness_cols.size(); ++i)
        std::cout << (i ? "," : "") << rep.witness_cols[i];
    std::cout << ")\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Equivariant K-homology of cocompact hyperbolic reflection groups "
        "from polyhedron combinatorics"};
    app.require_subcommand(1);

    ComputeArgs cargs;
    auto* compute = app.add_subcommand(
        "compute", "Full pipeline on a polyhedron description file");
    compute->add_option("file", cargs.file, "input document")->required();
    compute->add_option("--format", cargs.format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    compute->add_option("--basis", cargs.basis, "standard | transformed")
        ->check(CLI::IsMember({"standard", "transformed"}));
    compute->add_option("--dump-matrices", cargs.dump_dir,
                        "write d1/d2/d3 in sparse triplet format to this directory");
    compute->add_flag("--skip-criterion", cargs.skip_criterion,
                      "skip the vertex-block minor criterion");

    std::string vfile;
    auto* validate = app.add_subcommand(
        "validate", "Check a polyhedron description and report all violations");
    validate->add_option("file", vfile, "input document")->required();

    std::string mfile;
    auto* minors = app.add_subcommand(
        "minors", "Check all minors of a raw matrix (sparse triplet file)");
    minors->add_option("file", mfile, "matrix file")->required();

    auto* corpus = app.add_subcommand("corpus", "Built-in examples");
    corpus->require_subcommand(1);
    auto* clist = corpus->add_subcommand("list", "List corpus entries");
    std::string cname;
    ComputeArgs ccargs;
    auto* crun = corpus->add_subcommand("run", "Run one corpus entry");
    crun->add_option("name", cname, "corpus entry name")->required();
    crun->add_option("--format", ccargs.format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    crun->add_option("--basis", ccargs.basis, "standard | transformed")
        ->check(CLI::IsMember({"standard", "transformed"}));
    crun->add_option("--dump-matrices", ccargs.dump_dir,
                     "write d1/d2/d3 in sparse triplet format to this directory");
    crun->add_flag("--skip-criterion", ccargs.skip_criterion,
                   "skip the vertex-block minor criterion");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) return run_compute(load_coxeter(cargs.file), cargs);
        if (*validate) {
            CoxeterMatrix cm = load_coxeter(vfile);
            BuildResult res = try_build_complex(cm);
            if (res.complex) {
                const CellComplex& cc = *res.complex;
                std::cout << "ok: " << cm.faces << " faces, "
                          << cc.edges.size() << " edges, "
                          << cc.vertices.size() << " vertices\n";
                for (const Vertex& v : cc.vertices)
                    std::cout << "  vertex {" << v[0] << "," << v[1] << ","
                              << v[2] << "}: " << type_name(cc.vertex_type(v))
                              << "\n";
                return 0;
            }
            for (const std::string& d : res.diagnostics)
                std::cout << "violation: " << d << "\n";
            return 1;
        }
        if (*minors) {
            std::ifstream in(mfile);
            if (!in) throw std::runtime_error("cannot open " + mfile);
            return run_minor_check({IntMatrix::read_triplets(in)});
        }
        if (*clist) {
            for (const std::string& n : corpus_names()) std::cout << n << "\n";
            return 0;
        }
        if (*crun) {
            if (is_block_corpus(cname)) return run_minor_check(heisenberg_blocks());
            return run_compute(corpus_polyhedron(cname), ccargs);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
