#include "specht/gmodule.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace specht {

namespace {
constexpr const char* format_tag = "gmodule-v1";
}

std::string to_string(ModuleKind kind) {
    switch (kind) {
        case ModuleKind::specht: return "specht";
        case ModuleKind::radical: return "radical";
        default: return "generic";
    }
}

ModuleKind module_kind_from_string(const std::string& s) {
    if (s == "specht") return ModuleKind::specht;
    if (s == "radical") return ModuleKind::radical;
    if (s == "generic") return ModuleKind::generic;
    throw std::invalid_argument("GModule: unknown kind '" + s + "'");
}

GModule::GModule(int n, int r, PrimeField field, Subspace carrier,
                 ModuleKind kind, std::optional<Partition> label,
                 bool closure_certified)
    : n_(n), r_(r), field_(field), carrier_(std::move(carrier)),
      kind_(kind), label_(std::move(label)), certified_(closure_certified) {
    WordCodec codec(n, r);
    if (carrier_.ambient() != codec.dim())
        throw std::invalid_argument("GModule: carrier ambient != n^r");
    if (carrier_.field() != field_)
        throw std::invalid_argument("GModule: field mismatch");
}

GModule GModule::zero(int n, int r, PrimeField field) {
    WordCodec codec(n, r);
    return GModule(n, r, field, Subspace::zero(codec.dim(), field),
                   ModuleKind::generic, std::nullopt, true);
}

GModule GModule::full(int n, int r, PrimeField field, bool override_guard) {
    check_word_space_guard(n, r, override_guard);
    WordCodec codec(n, r);
    return GModule(n, r, field, Subspace::full(codec.dim(), field),
                   ModuleKind::generic, std::nullopt, true);
}

bool GModule::verify_closed() {
    WordCodec codec(n_, r_);
    auto gens = symmetric_group_generators(codec);
    certified_ = is_invariant(carrier_, gens);
    return certified_;
}

void GModule::write(std::ostream& os) const {
    os << format_tag << "\n";
    os << "n " << n_ << "\n";
    os << "r " << r_ << "\n";
    os << "p " << field_.modulus() << "\n";
    os << "lambda " << (label_ ? label_->to_string() : "-") << "\n";
    os << "kind " << to_string(kind_) << "\n";
    os << "certified " << (certified_ ? 1 : 0) << "\n";
    os << "dim " << carrier_.dim() << "\n";
    for (const auto& row : carrier_.rows()) {
        os << "row";
        for (const auto& e : row) os << " " << e.index << " " << e.value;
        os << "\n";
    }
    os << "end\n";
}

GModule GModule::read(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != format_tag)
        throw std::invalid_argument("GModule: bad or unsupported format header");

    int n = -1, r = -1;
    std::uint32_t p = 0;
    std::optional<Partition> label;
    ModuleKind kind = ModuleKind::generic;
    bool certified = false;
    std::size_t dim = 0;
    std::vector<SparseRow> rows;
    bool done = false;

    while (std::getline(is, line)) {
        if (line == "end") { done = true; break; }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "n") ls >> n;
        else if (key == "r") ls >> r;
        else if (key == "p") ls >> p;
        else if (key == "lambda") {
            std::string v;
            ls >> v;
            if (v != "-") label = Partition::parse(v);
        } else if (key == "kind") {
            std::string v;
            ls >> v;
            kind = module_kind_from_string(v);
        } else if (key == "certified") {
            int v = 0;
            ls >> v;
            certified = v != 0;
        } else if (key == "dim") {
            ls >> dim;
        } else if (key == "row") {
            SparseRow row;
            std::uint64_t idx;
            std::uint32_t val;
            while (ls >> idx >> val) row.push_back({idx, val});
            rows.push_back(std::move(row));
        } else {
            throw std::invalid_argument("GModule: unknown field '" + key + "'");
        }
        if (ls.fail() && !ls.eof())
            throw std::invalid_argument("GModule: malformed line '" + line + "'");
    }
    if (!done) throw std::invalid_argument("GModule: missing end marker");
    if (n < 1 || r < 0 || p == 0)
        throw std::invalid_argument("GModule: incomplete header");
    if (rows.size() != dim)
        throw std::invalid_argument("GModule: row count does not match dim");

    PrimeField f(p);
    WordCodec codec(n, r);
    Subspace carrier = Subspace::from_rows(codec.dim(), f, rows);
    if (carrier.dim() != dim)
        throw std::invalid_argument("GModule: stored rows are not a basis in canonical form");
    return GModule(n, r, f, std::move(carrier), kind, std::move(label), certified);
}

void GModule::save(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("GModule: cannot open '" + path + "' for writing");
    write(os);
}

GModule GModule::load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("GModule: cannot open '" + path + "'");
    return read(is);
}

std::vector<IndexBijection> symmetric_group_generators(const WordCodec& codec) {
    std::vector<IndexBijection> gens;
    for (int i = 0; i + 1 < codec.r; ++i) {
        Permutation s = Permutation::adjacent_transposition(i, codec.r);
        gens.push_back([codec, s](std::uint64_t idx) { return codec.act_index(s, idx); });
    }
    return gens;
}

}
