#include "f2alg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "f2alg/checker.hpp"
#include "f2alg/errors.hpp"
#include "f2alg/spaces.hpp"
#include "f2alg/steenrod.hpp"

namespace f2alg::cli {

namespace {

    Presentation load_presentation(const std::string& path, std::ostream& err)
    {
        std::ifstream in(path);
        if (!in)
            throw Error(path + ": cannot open file");
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            Presentation pres = parse_presentation(buf.str());
            for (const std::string& w : pres.warnings())
                err << path << ": warning: " << w << "\n";
            return pres;
        }
        catch (const ParseError& e) {
            throw Error(path + ": " + e.what());
        }
    }

    void write_file(const std::string& path, const std::string& content)
    {
        std::ofstream out(path);
        if (!out)
            throw Error(path + ": cannot open file for writing");
        out << content;
        if (!out)
            throw Error(path + ": write failed");
    }

    std::vector<std::string> split_on_commas(const std::string& s)
    {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (start <= s.size()) {
            std::size_t comma = s.find(',', start);
            if (comma == std::string::npos) {
                parts.push_back(s.substr(start));
                break;
            }
            parts.push_back(s.substr(start, comma - start));
            start = comma + 1;
        }
        return parts;
    }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"graded F2 algebras with Steenrod and Milnor operations"};
    app.require_subcommand(1);
    int rc = 0;

    // basis FILE --degree D
    auto* basis = app.add_subcommand("basis", "print the quotient basis in one degree");
    std::string basis_file;
    int basis_degree = 0;
    int basis_maxdeg = GradedAlgebra::kDefaultMaxDegree;
    basis->add_option("FILE", basis_file, "presentation file")->required();
    basis->add_option("--degree", basis_degree, "degree to inspect")
        ->required()
        ->check(CLI::NonNegativeNumber);
    basis->add_option("--max-degree", basis_maxdeg, "computation bound");
    basis->callback([&] {
        Presentation pres = load_presentation(basis_file, err);
        GradedAlgebra alg(std::move(pres), basis_maxdeg);
        const DegreeBasis& db = alg.degree_basis(basis_degree);
        out << "dim " << db.dim() << "\n";
        if (db.basis_monomials.empty()) {
            out << "(empty)\n";
            return;
        }
        for (const Monomial& m : db.basis_monomials)
            out << format_monomial(alg.pres(), m) << "\n";
    });

    // poincare FILE --through D
    auto* poincare = app.add_subcommand("poincare", "print per-degree dimensions");
    std::string poincare_file;
    int poincare_through = 0;
    int poincare_maxdeg = GradedAlgebra::kDefaultMaxDegree;
    poincare->add_option("FILE", poincare_file, "presentation file")->required();
    poincare->add_option("--through", poincare_through, "last degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    poincare->add_option("--max-degree", poincare_maxdeg, "computation bound");
    poincare->callback([&] {
        Presentation pres = load_presentation(poincare_file, err);
        GradedAlgebra alg(std::move(pres), poincare_maxdeg);
        std::vector<int> dims = alg.poincare_series(poincare_through);
        for (std::size_t d = 0; d < dims.size(); ++d)
            out << (d ? " " : "") << dims[d];
        out << "\n";
    });

    // nf FILE POLY
    auto* nf = app.add_subcommand("nf", "normal form of a polynomial");
    std::string nf_file, nf_poly;
    int nf_maxdeg = GradedAlgebra::kDefaultMaxDegree;
    nf->add_option("FILE", nf_file, "presentation file")->required();
    nf->add_option("POLY", nf_poly, "polynomial")->required();
    nf->add_option("--max-degree", nf_maxdeg, "computation bound");
    nf->callback([&] {
        Presentation pres = load_presentation(nf_file, err);
        GradedAlgebra alg(pres, nf_maxdeg);
        Poly p = parse_poly(alg.pres(), nf_poly);
        out << format_poly(alg.pres(), alg.normal_form(p)) << "\n";
    });

    // sq FILE I POLY
    auto* sq = app.add_subcommand("sq", "apply a Steenrod square");
    std::string sq_file, sq_poly;
    int sq_i = 0;
    int sq_maxdeg = GradedAlgebra::kDefaultMaxDegree;
    sq->add_option("FILE", sq_file, "presentation file")->required();
    sq->add_option("I", sq_i, "square index")->required()->check(CLI::NonNegativeNumber);
    sq->add_option("POLY", sq_poly, "polynomial")->required();
    sq->add_option("--max-degree", sq_maxdeg, "computation bound");
    sq->callback([&] {
        Presentation pres = load_presentation(sq_file, err);
        GradedAlgebra alg(pres, sq_maxdeg);
        Poly p = parse_poly(alg.pres(), sq_poly);
        out << format_poly(alg.pres(), apply_sq(alg, sq_i, p)) << "\n";
    });

    // q FILE I POLY
    auto* q = app.add_subcommand("q", "apply a Milnor operation");
    std::string q_file, q_poly;
    int q_i = 0;
    int q_maxdeg = GradedAlgebra::kDefaultMaxDegree;
    q->add_option("FILE", q_file, "presentation file")->required();
    q->add_option("I", q_i, "Milnor index")->required()->check(CLI::NonNegativeNumber);
    q->add_option("POLY", q_poly, "polynomial")->required();
    q->add_option("--max-degree", q_maxdeg, "computation bound");
    q->callback([&] {
        Presentation pres = load_presentation(q_file, err);
        GradedAlgebra alg(pres, q_maxdeg);
        Poly p = parse_poly(alg.pres(), q_poly);
        out << format_poly(alg.pres(), milnor_q(alg, q_i, p)) << "\n";
    });

    // adem WORD
    auto* adem = app.add_subcommand("adem", "Adem-normalize a word of squares");
    std::string adem_word;
    adem->add_option("WORD", adem_word, "word, e.g. \"Sq1 Sq2\"")->required();
    adem->callback([&] { out << format_admissible_sum(adem_normalize(parse_sq_word(adem_word)))
                             << "\n"; });

    // kunneth FILE_A FILE_B -o OUT
    auto* kunneth = app.add_subcommand("kunneth", "tensor product of two presentations");
    std::string kunneth_a, kunneth_b, kunneth_out;
    kunneth->add_option("FILE_A", kunneth_a, "first presentation")->required();
    kunneth->add_option("FILE_B", kunneth_b, "second presentation")->required();
    kunneth->add_option("-o,--output", kunneth_out, "output file")->required();
    kunneth->callback([&] {
        Presentation a = load_presentation(kunneth_a, err);
        Presentation b = load_presentation(kunneth_b, err);
        KunnethProduct kp = kunneth_product(a, b);
        write_file(kunneth_out, format_presentation(kp.pres));
        for (const auto& [from, to] : kp.renames)
            out << "renamed " << from << " -> " << to << "\n";
        out << "wrote " << kunneth_out << " (" << kp.pres.gen_count() << " generators, "
            << kp.pres.relations().size() << " relations)\n";
    });

    // quotient FILE --kill POLY[,POLY...] -o OUT
    auto* quotient = app.add_subcommand("quotient", "quotient by a homogeneous ideal");
    std::string quotient_file, quotient_kill, quotient_out;
    quotient->add_option("FILE", quotient_file, "presentation file")->required();
    quotient->add_option("--kill", quotient_kill, "comma-separated ideal generators")
        ->required();
    quotient->add_option("-o,--output", quotient_out, "output file")->required();
    quotient->callback([&] {
        Presentation pres = load_presentation(quotient_file, err);
        std::vector<Poly> gens;
        for (const std::string& part : split_on_commas(quotient_kill))
            gens.push_back(parse_poly(pres, part));
        Presentation result = quotient_by_ideal(pres, gens);
        write_file(quotient_out, format_presentation(result));
        out << "wrote " << quotient_out << " (" << result.gen_count() << " generators, "
            << result.relations().size() << " relations)\n";
    });

    // check-table FILE --through D
    auto* check = app.add_subcommand("check-table", "check the Steenrod table against Adem");
    std::string check_file;
    int check_through = 0;
    int check_maxdeg = GradedAlgebra::kDefaultMaxDegree;
    check->add_option("FILE", check_file, "presentation file")->required();
    check->add_option("--through", check_through, "degree bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    check->add_option("--max-degree", check_maxdeg, "computation bound");
    check->callback([&] {
        Presentation pres = load_presentation(check_file, err);
        GradedAlgebra alg(pres, check_maxdeg);
        TableCheckReport report = check_table_consistency(alg, check_through);
        for (const TableViolation& v : report.violations)
            out << "violation: " << format_sq_word(v.word) << " on "
                << alg.pres().generators()[v.gen].name << ": word acts by "
                << format_poly(alg.pres(), v.lhs) << ", admissible form acts by "
                << format_poly(alg.pres(), v.rhs) << "\n";
        out << "violations: " << report.violations.size()
            << ", undetermined pairs skipped: " << report.skipped.size() << "\n";
        if (!report.consistent())
            rc = 1;
    });

    // model NAME
    auto* model = app.add_subcommand("model", "print a bundled presentation");
    std::string model_name_arg;
    model->add_option("NAME", model_name_arg, "BPU4, BS1, P1 or P1x4")->required();
    model->callback([&] {
        auto id = find_model(model_name_arg);
        if (!id)
            throw UnknownModelError("unknown model '" + model_name_arg + "'");
        out << model_text(*id);
    });

    // verify-paper [--json] [--model FILE]
    auto* verify = app.add_subcommand("verify-paper", "run the replay suite");
    bool verify_json = false;
    std::string verify_model;
    verify->add_flag("--json", verify_json, "emit the machine-readable report");
    verify->add_option("--model", verify_model,
                       "replacement for the bundled BPU4 model (sensitivity runs)");
    verify->callback([&] {
        VerificationReport report =
            verify_model.empty()
                ? verify_paper_suite()
                : verify_paper_suite(load_presentation(verify_model, err));
        out << (verify_json ? report.to_json() : report.to_text());
        if (!report.overall)
            rc = 1;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);  // prints the contextual help, returns 0
    }
    catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace f2alg::cli
