#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moonshine/cycle_shape.hpp"
#include "moonshine/cyclotomic.hpp"

namespace moonshine {

enum class Group { M12, M12_2, M24Partial };

std::string group_name(Group g);

struct ClassId {
    Group group;
    std::string label;
    std::optional<CycleShape> shape;
};

// Exact character table loaded from the bundled versioned text format.
class CharTable {
public:
    static CharTable load(const std::string& text);
    std::string to_text() const;  // canonical re-serialization
    std::uint64_t checksum() const;  // FNV-1a over the canonical text

    Group group() const { return group_; }
    BigInt group_order() const { return order_; }
    const std::vector<ClassId>& classes() const { return classes_; }
    const std::vector<std::string>& irreps() const { return irreps_; }
    std::size_t inner_class_count() const { return inner_; }

    std::size_t class_index(const std::string& label) const;
    std::size_t irrep_index(const std::string& label) const;
    const ClassId& class_id(const std::string& label) const;
    const CycValue& value(const std::string& irrep, const std::string& cls) const;
    const CycValue& value_at(std::size_t irrep, std::size_t cls) const;
    BigInt dimension(const std::string& irrep) const;
    BigInt sum_of_dim_squares() const;

    std::string json() const;

private:
    Group group_ = Group::M12;
    BigInt order_ = 0;
    std::size_t inner_ = 0;
    std::vector<ClassId> classes_;
    std::vector<std::string> irreps_;
    std::vector<std::vector<CycValue>> values_;
};

// Bundled tables (checksum-verified on first access).
const CharTable& m12_table();
const CharTable& m12_2_table();
const CharTable& m24_partial_table();

// Outer-automorphism action on M12 conjugacy classes:
// 4A<->4B, 8A<->8B, 11A<->11B, everything else fixed.
std::string outer_involution(const std::string& m12_class);

struct M24SplitRow {
    std::string m24_class;
    CycleShape m24_shape;
    std::optional<std::string> m12_2_class;  // absent for 7A
    std::optional<std::pair<std::string, std::string>> m12_pair;  // (rhohat, phi(rhohat))
};

const std::vector<M24SplitRow>& m24_split_rows();

// Pair of M12 classes a reducible M24 class decomposes into; nullopt for
// classes (7A) that do not reduce through the index-two subgroup.
std::optional<std::pair<std::string, std::string>> m24_split(const std::string& m24_class);

// Surjection of the 15 M12 classes onto the 12 inner classes of the
// double cover; exactly {4A,4B}, {8A,8B}, {11A,11B} fuse.
std::string fusion_m12_to_m12_2(const std::string& m12_class);

struct DecompositionCheck {
    std::string id;
    std::string anchor;
    bool ok = false;
    std::string detail;
};

// Verifies the bundled irrep decompositions (23, 45, 231, 770 dimensional)
// as exact class-function identities through the fusion map, plus the
// dimension bookkeeping for each identity.
std::vector<DecompositionCheck> verify_decompositions();

}  // namespace moonshine
