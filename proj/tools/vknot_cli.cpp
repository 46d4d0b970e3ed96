// vknot — knot codes, their groups, and two-bridge / Baumslag-Solitar
// constructions on the command line.
//
// Exit codes: 0 success, 2 usage, 3 invalid input data, 4 input outside an
// operation's domain, 5 internal invariant failure.

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <vknot/json_io.hpp>
#include <vknot/vknot.hpp>

namespace {

using nlohmann::json;
using namespace vknot;

struct Options {
    std::string format = "text";
    std::optional<std::string> inline_input;
    std::string file_path;

    bool json_out() const { return format == "json"; }
};

// Inline argument, --file contents, or standard input, in that order.
std::string fetch_input(const Options& opt) {
    if (opt.inline_input) return *opt.inline_input;
    if (!opt.file_path.empty()) {
        std::ifstream in(opt.file_path);
        if (!in) throw validation_error("cannot open file '" + opt.file_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

template <typename T>
T parse_json_as(const std::string& text) {
    try {
        return json::parse(text).get<T>();
    } catch (const json::exception& e) {
        throw validation_error(std::string("bad JSON input: ") + e.what());
    }
}

KnotCode read_code(const Options& opt) {
    std::string text = fetch_input(opt);
    if (looks_like_json(text)) return parse_json_as<KnotCode>(text);
    return parse_code_text(text);
}

Presentation read_presentation(const Options& opt) {
    std::string text = fetch_input(opt);
    if (!looks_like_json(text))
        throw validation_error("presentations are read as JSON: "
                               "{\"generators\": [...], \"relators\": [...]}");
    Presentation p = parse_json_as<Presentation>(text);
    p.validate();
    return p;
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.json_out()) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

std::string wirtinger_text(const WirtingerPresentation& wp) {
    std::ostringstream out;
    out << wp.base.str() << "\n";
    for (std::size_t k = 0; k < wp.links.size(); ++k)
        out << "r" << k + 1 << ": " << wp.base.generators[wp.links[k].from] << " -> "
            << wp.base.generators[wp.links[k].to] << " by "
            << wp.links[k].conjugator.str() << "\n";
    return out.str();
}

// ---- subcommand bodies -----------------------------------------------------

void run_code_validate(const Options& opt) {
    KnotCode k = read_code(opt);
    emit(opt, json{{"valid", true}, {"code", k}},
         "valid\n" + render_code_text(k) + "\n");
}

void run_code_normalize(const Options& opt) {
    KnotCode k = standard_normal_form(read_code(opt));
    emit(opt, json(k), render_code_text(k) + "\n");
}

void run_code_arcs(const Options& opt) {
    KnotCode k = standard_normal_form(read_code(opt));
    ArcDecomposition d = arc_decomposition(k);
    std::ostringstream out;
    for (std::size_t i = 0; i < d.arcs.size(); ++i) {
        out << "S" << i + 1 << ":";
        for (long long v : d.arcs[i]) out << " " << v;
        out << "\n";
    }
    emit(opt, json(d), out.str());
}

void run_code_bridges(const Options& opt) {
    BridgeDecomposition d = bridge_decomposition(read_code(opt));
    std::ostringstream out;
    out << render_code_text(d.code) << "\n";
    out << "segments: " << d.segment_count << "\nbridges: " << d.bridge_count << "\n";
    for (std::size_t t = 0; t < d.bridges.size(); ++t) {
        out << "y" << t + 1 << ":";
        for (long long v : d.bridges[t]) out << " " << v;
        out << " | under-run:";
        for (long long v : d.under_runs[t]) out << " " << v;
        out << "\n";
    }
    emit(opt, json(d), out.str());
}

void run_code_group(const Options& opt, const std::string& form) {
    KnotCode k = read_code(opt);
    WirtingerPresentation wp = form == "arc" ? arc_presentation(k) : over_presentation(k);
    emit(opt, json(wp), wirtinger_text(wp));
}

void run_code_peripheral(const Options& opt) {
    PeripheralPair pp = peripheral_pair(read_code(opt));
    std::ostringstream out;
    out << "longitude: " << pp.longitude.str() << "\nmeridian: " << pp.meridian
        << "\np: " << pp.writhe_p << "\n";
    emit(opt, json(pp), out.str());
}

void run_synth_from_wirtinger(const Options& opt) {
    Presentation p = read_presentation(opt);
    WirtingerPresentation wp = wirtinger_from_presentation(p);
    if (!wp.cyclic) wp = close_deficiency_one(wp);
    KnotCode code = cyclic_wirtinger_to_code(wp);
    emit(opt, json{{"closed", wp}, {"code", code}},
         wirtinger_text(wp) + render_code_text(code) + "\n");
}

void run_synth_from_relator(const Options& opt) {
    Presentation p = read_presentation(opt);
    if (p.generators.size() != 2 || p.relators.size() != 1)
        throw precondition_error("need a two-generator one-relator presentation");
    WirtingerPresentation chain =
        onerel_to_cyclic_wirtinger(p.relators[0], p.generators[0], p.generators[1]);
    WirtingerPresentation closed = close_deficiency_one(chain);
    KnotCode code = cyclic_wirtinger_to_code(closed);
    emit(opt, json{{"chain", chain}, {"closed", closed}, {"code", code}},
         wirtinger_text(chain) + render_code_text(code) + "\n");
}

void run_bs_code(const Options& opt, long long m) {
    BSVirtualKnot bs = bs_virtual_code(m);
    BridgeDecomposition bd = bridge_decomposition(bs.code);
    std::ostringstream out;
    out << wirtinger_text(bs.presentation) << render_code_text(bs.code) << "\n"
        << "crossings: " << bs.code.size() << "\nsegments: " << bd.segment_count << "\n";
    emit(opt,
         json{{"presentation", bs.presentation},
              {"closed", bs.closed},
              {"code", bs.code},
              {"crossings", bs.code.size()},
              {"segments", bd.segment_count}},
         out.str());
}

void run_bs_classify(const Options& opt, long long m, long long n) {
    BSReport rep = bs_classify(m, n);
    std::ostringstream out;
    out << "BS(" << m << ", " << n << ")\n"
        << "residually finite: " << (rep.residually_finite ? "yes" : "no") << "\n"
        << "hopfian: " << (rep.hopfian ? "yes" : "no") << "\n"
        << "abelianization: "
        << (rep.abelianization.first == 2 ? "Z + Z"
            : rep.abelianization.second == 1
                ? "Z"
                : "Z + Z/" + rep.abelianization.second.str())
        << "\n"
        << "virtual knot group: " << (rep.is_virtual_knot_group ? "yes" : "no") << "\n"
        << "center: " << rep.center_str() << "\n";
    emit(opt, json(rep), out.str());
}

void run_schubert(const Options& opt, long long alpha, long long beta,
                  const std::string& emit_what) {
    SchubertParams p = schubert_params(alpha, beta);
    json j{{"alpha", alpha}, {"beta", beta}};
    std::ostringstream out;
    const bool all = emit_what.empty();
    if (all || emit_what == "exponents") {
        std::vector<int> e = schubert_exponents(p);
        SchubertSValue s = schubert_s_value(p);
        j["exponents"] = e;
        j["s"] = s;
        out << "e:";
        for (int v : e) out << " " << (v > 0 ? "+" : "-");
        out << "\ns = " << s.s << " (s*beta = " << (s.case_sign > 0 ? "-1" : "+1")
            << " mod alpha)\n";
    }
    if (all || emit_what == "presentation") {
        SchubertPresentations pres = schubert_presentations(p);
        j["w1"] = pres.w1.str();
        j["w2"] = pres.w2.str();
        j["two_relator"] = pres.two_relator;
        j["one_relator"] = pres.one_relator;
        out << "w1: " << pres.w1.str() << "\nw2: " << pres.w2.str() << "\n"
            << "two-relator: " << pres.two_relator.str() << "\n"
            << "one-relator: " << pres.one_relator.str() << "\n";
    }
    if (all || emit_what == "code") {
        KnotCode code = schubert_code(p);
        j["code"] = code;
        out << render_code_text(code) << "\n";
    }
    if (all || emit_what == "alexander") {
        LaurentPoly delta = alexander_two_generator(schubert_presentations(p).one_relator);
        j["alexander"] = delta.str();
        if (all) out << "alexander: ";
        out << delta.str() << "\n";
    }
    emit(opt, j, out.str());
}

void run_alexander(const Options& opt) {
    Presentation p = read_presentation(opt);
    LaurentPoly delta = alexander_two_generator(p);
    emit(opt, json{{"alexander", delta.str()}}, delta.str() + "\n");
}

void run_nabrep(const Options& opt, const std::string& word_text) {
    Word w = parse_word(word_text, {"x", "y"});
    BiPoly phi = nabrep_phi(w);
    emit(opt, json{{"word", w.str()}, {"phi", phi.str()}}, phi.str() + "\n");
}

void run_murasugi(const Options& opt, const std::string& poly_text, long long rmax) {
    LaurentPoly delta = parse_laurent(poly_text);
    MurasugiResult res = murasugi_center_test(delta, rmax);
    emit(opt, json(res), res.str() + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vknot — knot codes, Wirtinger groups, two-bridge and "
                 "Baumslag-Solitar constructions"};
    app.set_version_flag("--version", "vknot 1.0.0");
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto add_input = [&](CLI::App* cmd, const std::string& what) {
        cmd->add_option("input", opt.inline_input, what + " (inline; else --file or stdin)");
        cmd->add_option("--file", opt.file_path, "Read the " + what + " from a file");
    };

    // code ...
    CLI::App* code = app.add_subcommand("code", "Operations on knot codes");
    code->require_subcommand(1);
    add_input(code->add_subcommand("validate", "Check and canonicalize a code"), "code");
    add_input(code->add_subcommand("normalize", "Standard normal form"), "code");
    add_input(code->add_subcommand("arcs", "Arc decomposition S_i"), "code");
    add_input(code->add_subcommand("bridges", "Bridge decomposition"), "code");
    CLI::App* group = code->add_subcommand("group", "Group of the code");
    add_input(group, "code");
    std::string form = "arc";
    group->add_option("--form", form, "Presentation flavor")
        ->check(CLI::IsMember({"arc", "over"}))
        ->capture_default_str();
    add_input(code->add_subcommand("peripheral", "Longitude and meridian"), "code");

    // synth ...
    CLI::App* synth = app.add_subcommand("synth", "Presentation-to-code synthesis");
    synth->require_subcommand(1);
    add_input(synth->add_subcommand(
                  "from-wirtinger",
                  "Cyclic Wirtinger presentation (or deficiency-1 chain) to code"),
              "presentation");
    add_input(synth->add_subcommand(
                  "from-relator",
                  "Two-generator one-relator presentation with l_y(r) = +-1 to code"),
              "presentation");

    // bs ...
    CLI::App* bs = app.add_subcommand("bs", "Baumslag-Solitar groups");
    bs->require_subcommand(1);
    long long bs_m = 0, bs_n = 0;
    CLI::App* bscode = bs->add_subcommand("code", "Virtual knot code of BS(m, m+1)");
    bscode->add_option("m", bs_m, "Nonzero integer m")->required();
    CLI::App* bsclassify = bs->add_subcommand("classify", "Classify BS(m, n)");
    bsclassify->add_option("m", bs_m, "Nonzero integer m")->required();
    bsclassify->add_option("n", bs_n, "Nonzero integer n")->required();

    // schubert ...
    long long alpha = 0, beta = 0;
    std::string emit_what;
    CLI::App* schubert = app.add_subcommand("schubert", "Two-bridge family S(alpha, beta)");
    schubert->add_option("alpha", alpha, "Odd positive integer")->required();
    schubert->add_option("beta", beta, "Odd integer, 0 < beta < alpha, coprime")->required();
    schubert->add_option("--emit", emit_what, "Emit a single section")
        ->check(CLI::IsMember({"exponents", "presentation", "code", "alexander"}));

    // alexander / nabrep / murasugi
    add_input(app.add_subcommand("alexander",
                                 "Alexander polynomial of a 2-generator presentation"),
              "presentation");
    std::string nabrep_word;
    CLI::App* nabrep = app.add_subcommand("nabrep", "Nab-rep polynomial Phi(t, u)");
    nabrep->add_option("word", nabrep_word, "Word over x, y")->required();
    std::string murasugi_poly;
    long long rmax = 0;
    CLI::App* murasugi = app.add_subcommand("murasugi", "Murasugi center conditions");
    murasugi->add_option("polynomial", murasugi_poly, "Laurent polynomial in t")->required();
    murasugi->add_option("--rmax", rmax, "Search bound for 1 - t^r (default 2*deg^2)");

    // Let global options like --format trail the subcommand arguments.
    std::function<void(CLI::App*)> bubble = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            bubble(sub);
        }
    };
    bubble(&app);

    try {
        app.parse(argc, argv);

        if (code->got_subcommand("validate")) run_code_validate(opt);
        else if (code->got_subcommand("normalize")) run_code_normalize(opt);
        else if (code->got_subcommand("arcs")) run_code_arcs(opt);
        else if (code->got_subcommand("bridges")) run_code_bridges(opt);
        else if (code->got_subcommand("group")) run_code_group(opt, form);
        else if (code->got_subcommand("peripheral")) run_code_peripheral(opt);
        else if (synth->got_subcommand("from-wirtinger")) run_synth_from_wirtinger(opt);
        else if (synth->got_subcommand("from-relator")) run_synth_from_relator(opt);
        else if (bs->got_subcommand("code")) run_bs_code(opt, bs_m);
        else if (bs->got_subcommand("classify")) run_bs_classify(opt, bs_m, bs_n);
        else if (schubert->parsed()) run_schubert(opt, alpha, beta, emit_what);
        else if (app.got_subcommand("alexander")) run_alexander(opt);
        else if (nabrep->parsed()) run_nabrep(opt, nabrep_word);
        else if (murasugi->parsed()) run_murasugi(opt, murasugi_poly, rmax);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "out of domain: " << e.what() << "\n";
        return 4;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
