#include "fockcrystal/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fockcrystal/charge_group.hpp"
#include "fockcrystal/fock.hpp"
#include "fockcrystal/isomorphism.hpp"
#include "fockcrystal/json_io.hpp"
#include "fockcrystal/rmatrix.hpp"

namespace fock {

namespace {

Multicharge parse_charge(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        out.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument("bad multicharge entry: " + item);
    }
    if (out.empty()) throw std::invalid_argument("empty multicharge");
    return Multicharge(std::move(out));
}

Convention parse_conv(const std::string& name) {
    if (name == "plus") return Convention::Plus;
    if (name == "minus") return Convention::Minus;
    throw std::invalid_argument("convention must be plus or minus");
}

std::string charge_str(const Multicharge& s) {
    std::string out = "(";
    for (int k = 0; k < s.level(); ++k) {
        if (k) out += ',';
        out += std::to_string(s.charge(k));
    }
    return out + ")";
}

void print_crystal_text(const CrystalGraph& g, std::ostream& out) {
    out << "vertices " << g.vertices.size() << ", edges " << g.edges.size() << "\n";
    for (std::size_t r = 0; r < g.layers.size(); ++r)
        for (int v : g.layers[r])
            out << v << " (rank " << r << ") " << nlohmann::json(g.vertices[v]).dump() << "\n";
    for (const CrystalEdge& e : g.edges)
        out << e.src << " -" << e.residue << "(" << e.content << ")-> " << e.dst << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fock-space crystal combinatorics"};
    app.require_subcommand(1);

    std::string charge_csv, from_csv, to_csv, conv_name = "plus", format = "json";
    std::string mp_json, left_json, right_json, check_kind;
    int e = 2, max_rank = 0;

    auto* crystal = app.add_subcommand("crystal", "generate a crystal graph");
    crystal->add_option("--e", e)->required()->check(CLI::Range(2, 1 << 20));
    crystal->add_option("--charge", charge_csv)->required();
    crystal->add_option("--conv", conv_name)->check(CLI::IsMember({"plus", "minus"}));
    crystal->add_option("--max-rank", max_rank)->required()->check(CLI::NonNegativeNumber);
    crystal->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text"}));

    auto* check = app.add_subcommand("check", "membership tests; exit 0 true, 1 false");
    check->add_option("kind", check_kind)
        ->required()
        ->check(CLI::IsMember({"flotw", "uglov", "eregular", "erestricted"}));
    check->add_option("--mp", mp_json)->required();
    check->add_option("--charge", charge_csv);
    check->add_option("--e", e)->required()->check(CLI::Range(2, 1 << 20));
    check->add_option("--conv", conv_name)->check(CLI::IsMember({"plus", "minus"}));

    auto* iso = app.add_subcommand("iso", "crystal isomorphism between two multicharges");
    iso->add_option("--from", from_csv)->required();
    iso->add_option("--to", to_csv)->required();
    iso->add_option("--mp", mp_json)->required();
    iso->add_option("--e", e)->required()->check(CLI::Range(2, 1 << 20));

    auto* cls = app.add_subcommand("class", "isomorphism class of a multipartition");
    cls->add_option("--mp", mp_json)->required();
    cls->add_option("--charge", charge_csv)->required();
    cls->add_option("--e", e)->required()->check(CLI::Range(2, 1 << 20));

    auto* toflotw = app.add_subcommand("to-flotw", "FLOTW representative and reduction word");
    toflotw->add_option("--mp", mp_json)->required();
    toflotw->add_option("--charge", charge_csv)->required();
    toflotw->add_option("--e", e)->required()->check(CLI::Range(2, 1 << 20));

    auto* reduce = app.add_subcommand("reduce", "fundamental multicharge and word");
    reduce->add_option("--charge", charge_csv)->required();
    reduce->add_option("--e", e)->required()->check(CLI::Range(2, 1 << 20));

    auto* th = app.add_subcommand("theta", "R-matrix on finite columns");
    th->add_option("--left", left_json)->required();
    th->add_option("--right", right_json)->required();

    auto* ps = app.add_subcommand("psi", "R-matrix on charged partitions");
    ps->add_option("--left", left_json)->required();
    ps->add_option("--right", right_json)->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& help) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& pe) {
        err << "error: " << pe.what() << "\n";
        return 2;
    }

    try {
        if (*crystal) {
            const CrystalGraph g =
                generate_crystal(parse_charge(charge_csv), e, parse_conv(conv_name), max_rank);
            if (format == "json")
                out << crystal_to_json(g).dump() << "\n";
            else if (format == "dot")
                out << crystal_to_dot(g);
            else
                print_crystal_text(g, out);
            return 0;
        }
        if (*check) {
            const auto mp = nlohmann::json::parse(mp_json).get<Multipartition>();
            bool ok = false;
            if (check_kind == "eregular" || check_kind == "erestricted") {
                if (mp.level() != 1)
                    throw std::invalid_argument(check_kind + " expects a level-1 multipartition");
                ok = check_kind == "eregular" ? is_e_regular(mp.component(0), e)
                                              : is_e_restricted(mp.component(0), e);
            } else {
                if (charge_csv.empty())
                    throw std::invalid_argument("--charge is required for " + check_kind);
                const Multicharge s = parse_charge(charge_csv);
                ok = check_kind == "flotw" ? is_flotw(mp, s, e, parse_conv(conv_name))
                                           : is_uglov(mp, s, e, parse_conv(conv_name));
            }
            out << (ok ? "true" : "false") << "\n";
            return ok ? 0 : 1;
        }
        if (*iso) {
            const auto mp = nlohmann::json::parse(mp_json).get<Multipartition>();
            const auto [img, charge] =
                gamma_to(mp, parse_charge(from_csv), parse_charge(to_csv), e);
            out << nlohmann::json{{"charge", charge}, {"multipartition", img}}.dump() << "\n";
            return 0;
        }
        if (*cls) {
            const auto mp = nlohmann::json::parse(mp_json).get<Multipartition>();
            const IsoClass c = iso_class(mp, parse_charge(charge_csv), e);
            nlohmann::json members = nlohmann::json::array();
            for (const auto& [ch, m] : c.members)
                members.push_back({{"charge", ch}, {"multipartition", m}});
            out << nlohmann::json{{"base", {{"charge", c.base_charge},
                                            {"multipartition", c.base_mp}}},
                                  {"members", members}}
                       .dump()
                << "\n";
            return 0;
        }
        if (*toflotw) {
            const auto mp = nlohmann::json::parse(mp_json).get<Multipartition>();
            const FlotwImage img = to_flotw(mp, parse_charge(charge_csv), e);
            out << nlohmann::json{{"charge", img.fundamental},
                                  {"multipartition", img.mp},
                                  {"word", word_to_string(img.element.word())}}
                       .dump()
                << "\n";
            return 0;
        }
        if (*reduce) {
            const Reduction r = reduce_to_fundamental(parse_charge(charge_csv), e);
            out << charge_str(r.fundamental) << "\n"
                << word_to_string(r.element.word()) << "\n";
            return 0;
        }
        if (*th) {
            const auto c1 = nlohmann::json::parse(left_json).get<FiniteColumn>();
            const auto c2 = nlohmann::json::parse(right_json).get<FiniteColumn>();
            const auto [first, second] = theta(c1, c2);
            out << nlohmann::json{{"left", first}, {"right", second}}.dump() << "\n";
            return 0;
        }
        if (*ps) {
            const auto p1 = nlohmann::json::parse(left_json).get<InfiniteColumn>();
            const auto p2 = nlohmann::json::parse(right_json).get<InfiniteColumn>();
            const auto [first, second] = psi(p1, p2);
            out << nlohmann::json{{"left", first}, {"right", second}}.dump() << "\n";
            return 0;
        }
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace fock
