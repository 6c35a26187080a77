#include "moonshine/chartable.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace moonshine {

CycleShape::CycleShape(std::vector<std::pair<long, long>> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end());
    std::vector<std::pair<long, long>> merged;
    for (const auto& [j, a] : parts_) {
        if (j < 1 || a < 1) throw std::domain_error("CycleShape: lengths and multiplicities must be >= 1");
        if (!merged.empty() && merged.back().first == j)
            merged.back().second += a;
        else
            merged.emplace_back(j, a);
    }
    parts_ = std::move(merged);
}

CycleShape CycleShape::parse(const std::string& text) {
    std::vector<std::pair<long, long>> parts;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        auto caret = token.find('^');
        long j, a = 1;
        try {
            if (caret == std::string::npos) {
                j = std::stol(token);
            } else {
                j = std::stol(token.substr(0, caret));
                a = std::stol(token.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::domain_error("CycleShape::parse: bad token '" + token + "' in '" + text + "'");
        }
        parts.emplace_back(j, a);
        token.clear();
    };
    for (char c : text) {
        if (c == '.' || c == ' ' || c == '\t')
            flush();
        else
            token.push_back(c);
    }
    flush();
    if (parts.empty()) throw std::domain_error("CycleShape::parse: empty shape '" + text + "'");
    return CycleShape(std::move(parts));
}

long CycleShape::points() const {
    long n = 0;
    for (const auto& [j, a] : parts_) n += j * a;
    return n;
}

long CycleShape::order() const {
    long n = 1;
    for (const auto& [j, a] : parts_) n = lcm_long(n, j);
    return n;
}

long CycleShape::part_count() const {
    long n = 0;
    for (const auto& [j, a] : parts_) n += a;
    return n;
}

long CycleShape::multiplicity(long j) const {
    for (const auto& [k, a] : parts_)
        if (k == j) return a;
    return 0;
}

std::string CycleShape::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, a] : parts_) {
        if (!first) os << ".";
        os << j;
        if (a > 1) os << "^" << a;
        first = false;
    }
    return os.str();
}

CycleShape concatenate(const CycleShape& a, const CycleShape& b) {
    std::vector<std::pair<long, long>> parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    return CycleShape(std::move(parts));
}

std::string group_name(Group g) {
    switch (g) {
        case Group::M12: return "m12";
        case Group::M12_2: return "m12.2";
        case Group::M24Partial: return "m24partial";
    }
    return "?";
}

static Group group_from_name(const std::string& s) {
    if (s == "m12") return Group::M12;
    if (s == "m12.2") return Group::M12_2;
    if (s == "m24partial") return Group::M24Partial;
    throw std::domain_error("unknown group name " + s);
}

CharTable CharTable::load(const std::string& text) {
    CharTable t;
    std::istringstream in(text);
    std::string line;
    bool got_header = false;
    std::vector<std::string> shape_tokens;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (!got_header) {
            if (key != "moonshine-chartable") throw std::domain_error("chartable: missing format header");
            std::string ver;
            ls >> ver;
            if (ver != "v1") throw std::domain_error("chartable: unsupported version " + ver);
            got_header = true;
        } else if (key == "group") {
            std::string g;
            ls >> g;
            t.group_ = group_from_name(g);
        } else if (key == "order") {
            std::string v;
            ls >> v;
            t.order_ = bigint_from_decimal(v);
        } else if (key == "inner") {
            ls >> t.inner_;
        } else if (key == "classes") {
            std::string lbl;
            while (ls >> lbl) t.classes_.push_back(ClassId{t.group_, lbl, std::nullopt});
        } else if (key == "shapes") {
            std::string s;
            while (ls >> s) shape_tokens.push_back(s);
        } else if (key == "irrep") {
            std::string lbl;
            ls >> lbl;
            t.irreps_.push_back(lbl);
            std::vector<CycValue> row;
            std::string v;
            while (ls >> v) row.push_back(CycValue::parse(v));
            if (row.size() != t.classes_.size())
                throw std::domain_error("chartable: row " + lbl + " has " + std::to_string(row.size()) +
                                        " entries, expected " + std::to_string(t.classes_.size()));
            t.values_.push_back(std::move(row));
        } else if (key == "end") {
            break;
        } else {
            throw std::domain_error("chartable: unknown directive " + key);
        }
    }
    if (!shape_tokens.empty()) {
        if (shape_tokens.size() != t.classes_.size())
            throw std::domain_error("chartable: shapes row length mismatch");
        for (std::size_t i = 0; i < shape_tokens.size(); ++i)
            if (shape_tokens[i] != "-") t.classes_[i].shape = CycleShape::parse(shape_tokens[i]);
    }
    if (t.inner_ == 0) t.inner_ = t.classes_.size();
    if (t.classes_.empty() || t.irreps_.empty()) throw std::domain_error("chartable: empty table");
    return t;
}

std::string CharTable::to_text() const {
    std::ostringstream os;
    os << "moonshine-chartable v1\n";
    os << "group " << group_name(group_) << "\n";
    if (order_ != 0) os << "order " << to_decimal(order_) << "\n";
    os << "inner " << inner_ << "\n";
    os << "classes";
    for (const auto& c : classes_) os << " " << c.label;
    os << "\n";
    bool any_shape = std::any_of(classes_.begin(), classes_.end(),
                                 [](const ClassId& c) { return c.shape.has_value(); });
    if (any_shape) {
        os << "shapes";
        for (const auto& c : classes_) os << " " << (c.shape ? c.shape->str() : std::string("-"));
        os << "\n";
    }
    for (std::size_t i = 0; i < irreps_.size(); ++i) {
        os << "irrep " << irreps_[i];
        for (const auto& v : values_[i]) os << " " << v.str();
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

std::uint64_t CharTable::checksum() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : to_text()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::size_t CharTable::class_index(const std::string& label) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].label == label) return i;
    throw std::domain_error("unknown class label " + label + " in " + group_name(group_));
}

std::size_t CharTable::irrep_index(const std::string& label) const {
    for (std::size_t i = 0; i < irreps_.size(); ++i)
        if (irreps_[i] == label) return i;
    throw std::domain_error("unknown irrep label " + label + " in " + group_name(group_));
}

const ClassId& CharTable::class_id(const std::string& label) const {
    return classes_[class_index(label)];
}

const CycValue& CharTable::value(const std::string& irrep, const std::string& cls) const {
    return values_[irrep_index(irrep)][class_index(cls)];
}

const CycValue& CharTable::value_at(std::size_t irrep, std::size_t cls) const {
    return values_.at(irrep).at(cls);
}

BigInt CharTable::dimension(const std::string& irrep) const {
    return values_[irrep_index(irrep)][0].as_integer();
}

BigInt CharTable::sum_of_dim_squares() const {
    BigInt acc = 0;
    for (const auto& row : values_) {
        BigInt d = row[0].as_integer();
        acc += d * d;
    }
    return acc;
}

std::string CharTable::json() const {
    std::ostringstream os;
    os << "{\"group\":\"" << group_name(group_) << "\",\"order\":\"" << to_decimal(order_)
       << "\",\"classes\":[";
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (i) os << ",";
        os << "{\"label\":\"" << classes_[i].label << "\"";
        if (classes_[i].shape) os << ",\"shape\":\"" << classes_[i].shape->str() << "\"";
        os << ",\"inner\":" << (i < inner_ ? "true" : "false") << "}";
    }
    os << "],\"irreps\":[";
    for (std::size_t i = 0; i < irreps_.size(); ++i) {
        if (i) os << ",";
        os << "\"" << irreps_[i] << "\"";
    }
    os << "],\"values\":[";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < values_[i].size(); ++j) {
            if (j) os << ",";
            os << "\"" << values_[i][j].str() << "\"";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

std::string outer_involution(const std::string& c) {
    static const std::map<std::string, std::string> swaps = {
        {"4A", "4B"}, {"4B", "4A"}, {"8A", "8B"}, {"8B", "8A"}, {"11A", "11B"}, {"11B", "11A"}};
    m12_table().class_index(c);  // validates the label
    auto it = swaps.find(c);
    return it == swaps.end() ? c : it->second;
}

const std::vector<M24SplitRow>& m24_split_rows() {
    static const std::vector<M24SplitRow> rows = [] {
        auto mk = [](const char* m24, const char* shape, const char* m122, const char* a,
                     const char* b) {
            M24SplitRow r;
            r.m24_class = m24;
            r.m24_shape = CycleShape::parse(shape);
            if (m122) r.m12_2_class = m122;
            if (a) r.m12_pair = std::make_pair(std::string(a), std::string(b));
            return r;
        };
        std::vector<M24SplitRow> v;
        v.push_back(mk("1A", "1^24", "1A", "1A", "1A"));
        v.push_back(mk("2A", "1^8.2^8", "2B", "2B", "2B"));
        v.push_back(mk("3A", "1^6.3^6", "3A", "3A", "3A"));
        v.push_back(mk("4B", "1^4.2^2.4^4", "4A", "4B", "4A"));
        v.push_back(mk("5A", "1^4.5^4", "5A", "5A", "5A"));
        v.push_back(mk("6A", "1^2.2^2.3^2.6^2", "6B", "6B", "6B"));
        v.push_back(mk("7A", "1^3.7^3", nullptr, nullptr, nullptr));
        v.push_back(mk("8A", "1^2.2.4.8^2", "8A", "8A", "8B"));
        return v;
    }();
    return rows;
}

std::optional<std::pair<std::string, std::string>> m24_split(const std::string& m24_class) {
    for (const auto& r : m24_split_rows())
        if (r.m24_class == m24_class) return r.m12_pair;
    throw std::domain_error("m24_split: class " + m24_class + " is not a bundled split row");
}

std::string fusion_m12_to_m12_2(const std::string& c) {
    m12_table().class_index(c);
    if (c == "4B") return "4A";
    if (c == "8B") return "8A";
    if (c == "11B") return "11A";
    return c;
}

std::vector<DecompositionCheck> verify_decompositions() {
    struct Identity {
        const char* id;
        long dim;
        std::vector<const char*> big;    // irreps of the double cover
        std::vector<const char*> small;  // irreps of M12, with multiplicity by repetition
    };
    static const std::vector<Identity> identities = {
        {"chi23", 23, {"chi2", "chi3"}, {"chi1", "chi2", "chi3"}},
        {"chi45", 45, {"chi5"}, {"chi6"}},
        {"chi231", 231, {"chi9", "chi20"}, {"chi8", "chi15"}},
        {"chi770",
         770,
         {"chi12", "chi16", "chi17", "chi18", "chi19", "chi20"},
         {"chi11", "chi13", "chi13", "chi14", "chi14", "chi15"}},
    };
    const CharTable& small = m12_table();
    const CharTable& big = m12_2_table();
    std::vector<DecompositionCheck> out;
    for (const auto& idn : identities) {
        DecompositionCheck chk;
        chk.id = idn.id;
        std::ostringstream anchor;
        anchor << idn.id << " =";
        for (const auto* b : idn.big) anchor << " " << b << "[m12.2]";
        anchor << " =";
        for (const auto* s : idn.small) anchor << " " << s << "[m12]";
        chk.anchor = anchor.str();
        chk.ok = true;
        BigInt dim_big = 0, dim_small = 0;
        for (const auto* b : idn.big) dim_big += big.dimension(b);
        for (const auto* s : idn.small) dim_small += small.dimension(s);
        if (dim_big != idn.dim || dim_small != idn.dim) {
            chk.ok = false;
            chk.detail = "dimension bookkeeping failed: " + to_decimal(dim_big) + " vs " +
                         to_decimal(dim_small) + " vs " + std::to_string(idn.dim);
        }
        for (const auto& cls : small.classes()) {
            CycValue lhs, rhs;
            std::string fused = fusion_m12_to_m12_2(cls.label);
            for (const auto* b : idn.big) lhs += big.value(b, fused);
            for (const auto* s : idn.small) rhs += small.value(s, cls.label);
            if (!(lhs == rhs)) {
                chk.ok = false;
                chk.detail += " mismatch at class " + cls.label + ": " + lhs.str() + " != " + rhs.str();
            }
        }
        out.push_back(std::move(chk));
    }
    return out;
}

}  // namespace moonshine
