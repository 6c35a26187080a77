#include <map>
#include <mutex>
#include <stdexcept>

#include "moonshine/chartable.hpp"

namespace moonshine {

// Bundled character-table data in the versioned text format. The sporadic
// tables are fixed reference data; a checksum over the canonical
// re-serialization guards against accidental edits.
//
// Labeling of the two non-invariant 55-dimensional irreps: chi9 is the one
// satisfying chi9 = Lambda^2(chi2) as a class function (the exterior square
// of the 11 whose 1+chi2 counts fixed points of the 12-point action). With
// the class/shape dictionary 4A = 2^2.4^2, 8A = 4.8 this pins
// chi9(4A) = -1, chi9(8A) = 1, and chi10 as its partner under the outer
// involution. The boson-trace expansions verify this labeling at q^2.

static const char* const M12_TABLE_TEXT = R"(moonshine-chartable v1
group m12
order 95040
inner 15
classes 1A 2A 2B 3A 3B 4A 4B 5A 6A 6B 8A 8B 10A 11A 11B
shapes 1^12 2^6 1^4.2^4 1^3.3^3 3^4 2^2.4^2 1^4.4^2 1^2.5^2 6^2 1.2.3.6 4.8 1^2.2.8 2.10 1.11 1.11
irrep chi1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
irrep chi2 11 -1 3 2 -1 -1 3 1 -1 0 -1 1 -1 0 0
irrep chi3 11 -1 3 2 -1 3 -1 1 -1 0 1 -1 -1 0 0
irrep chi4 16 4 0 -2 1 0 0 1 1 0 0 0 -1 cyc(11;1:1,3:1,4:1,5:1,9:1) cyc(11;2:1,6:1,7:1,8:1,10:1)
irrep chi5 16 4 0 -2 1 0 0 1 1 0 0 0 -1 cyc(11;2:1,6:1,7:1,8:1,10:1) cyc(11;1:1,3:1,4:1,5:1,9:1)
irrep chi6 45 5 -3 0 3 1 1 0 -1 0 -1 -1 0 1 1
irrep chi7 54 6 6 0 0 2 2 -1 0 0 0 0 1 -1 -1
irrep chi8 55 -5 7 1 1 -1 -1 0 1 1 -1 -1 0 0 0
irrep chi9 55 -5 -1 1 1 -1 3 0 1 -1 1 -1 0 0 0
irrep chi10 55 -5 -1 1 1 3 -1 0 1 -1 -1 1 0 0 0
irrep chi11 66 6 2 3 0 -2 -2 1 0 -1 0 0 1 0 0
irrep chi12 99 -1 3 0 3 -1 -1 -1 -1 0 1 1 -1 0 0
irrep chi13 120 0 -8 3 0 0 0 0 0 1 0 0 0 -1 -1
irrep chi14 144 4 0 0 -3 0 0 -1 1 0 0 0 -1 1 1
irrep chi15 176 -4 0 -4 -1 0 0 1 -1 0 0 0 1 0 0
end
)";

// chi21 is transcribed exactly as printed, including its coincidence with
// chi20 on the outer-coset columns.
static const char* const M12_2_TABLE_TEXT = R"(moonshine-chartable v1
group m12.2
order 190080
inner 12
classes 1A 2A 2B 3A 3B 4A 5A 6A 6B 8A 10A 11A 2C 4B 4C 6C 10B 10C 12A 12B 12C
shapes 1^24 - 1^8.2^8 1^6.3^6 - 1^4.2^2.4^4 1^4.5^4 - 1^2.2^2.3^2.6^2 1^2.2.4.8^2 - - - - 4^6 - - - - - -
irrep chi1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
irrep chi2 1 1 1 1 1 1 1 1 1 1 1 1 -1 -1 -1 -1 -1 -1 -1 -1 -1
irrep chi3 22 -2 6 4 -2 2 2 -2 0 0 -2 0 0 0 0 0 0 0 0 0 0
irrep chi4 32 8 0 -4 2 0 2 2 0 0 -2 -1 0 0 0 0 0 0 0 0 0
irrep chi5 45 5 -3 0 3 1 0 -1 0 -1 0 1 5 -3 1 -1 0 0 1 0 0
irrep chi6 45 5 -3 0 3 1 0 -1 0 -1 0 1 -5 3 -1 1 0 0 -1 0 0
irrep chi7 54 6 6 0 0 2 -1 0 0 0 1 -1 0 0 0 0 cyc(5;1:1,2:-1,3:-1,4:1) cyc(5;1:-1,2:1,3:1,4:-1) 0 0 0
irrep chi8 54 6 6 0 0 2 -1 0 0 0 1 -1 0 0 0 0 cyc(5;1:-1,2:1,3:1,4:-1) cyc(5;1:1,2:-1,3:-1,4:1) 0 0 0
irrep chi9 55 -5 7 1 1 -1 0 1 1 -1 0 0 5 1 -1 -1 0 0 -1 1 1
irrep chi10 55 -5 7 1 1 -1 0 1 1 -1 0 0 -5 -1 1 1 0 0 1 -1 -1
irrep chi11 110 -10 -2 2 2 2 0 2 -2 0 0 0 0 0 0 0 0 0 0 0 0
irrep chi12 66 6 2 3 0 -2 1 0 -1 0 1 0 6 2 0 0 1 1 0 -1 -1
irrep chi13 66 6 2 3 0 -2 1 0 -1 0 1 0 -6 -2 0 0 -1 -1 0 1 1
irrep chi14 99 -1 3 0 3 -1 -1 -1 0 1 -1 0 1 -3 -1 1 1 1 -1 0 0
irrep chi15 99 -1 3 0 3 -1 -1 -1 0 1 -1 0 -1 3 1 -1 -1 -1 1 0 0
irrep chi16 120 0 -8 3 0 0 0 0 1 0 0 -1 0 0 0 0 0 0 0 cyc(12;7:-1,11:1) cyc(12;7:1,11:-1)
irrep chi17 120 0 -8 3 0 0 0 0 1 0 0 -1 0 0 0 0 0 0 0 cyc(12;7:1,11:-1) cyc(12;7:-1,11:1)
irrep chi18 144 4 0 0 -3 0 -1 1 0 0 -1 1 4 0 2 1 -1 -1 -1 0 0
irrep chi19 144 4 0 0 -3 0 -1 1 0 0 -1 1 -4 0 -2 -1 1 1 1 0 0
irrep chi20 176 -4 0 -4 -1 0 1 -1 0 0 1 0 4 0 -2 1 -1 -1 1 0 0
irrep chi21 176 -4 0 -4 -1 0 1 -1 0 0 1 0 4 0 -2 1 -1 -1 1 0 0
end
)";

// The slice of M24 data the split rows need: chi1 and the 23-dimensional
// character on the bundled classes (chi23 = fixed points - 1 on 24 points).
static const char* const M24_PARTIAL_TABLE_TEXT = R"(moonshine-chartable v1
group m24partial
inner 8
classes 1A 2A 3A 4B 5A 6A 7A 8A
shapes 1^24 1^8.2^8 1^6.3^6 1^4.2^2.4^4 1^4.5^4 1^2.2^2.3^2.6^2 1^3.7^3 1^2.2.4.8^2
irrep chi1 1 1 1 1 1 1 1 1
irrep chi23 23 7 5 3 3 1 2 1
end
)";

// FNV-1a checksums of the canonical serialization of the three tables.
static constexpr std::uint64_t M12_CHECKSUM = 0x6bf3aadee37a8054ULL;
static constexpr std::uint64_t M12_2_CHECKSUM = 0xeb9cf421ba860926ULL;
static constexpr std::uint64_t M24_PARTIAL_CHECKSUM = 0x57da2fbf36d402b5ULL;

static const CharTable& load_checked(const char* text, std::uint64_t expect, const char* what) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    static std::map<const char*, CharTable> cache;
    auto it = cache.find(text);
    if (it == cache.end()) {
        CharTable t = CharTable::load(text);
        if (expect != 0 && t.checksum() != expect)
            throw std::runtime_error(std::string("character table ") + what +
                                     " failed its transcription checksum");
        it = cache.emplace(text, std::move(t)).first;
    }
    return it->second;
}

const CharTable& m12_table() { return load_checked(M12_TABLE_TEXT, M12_CHECKSUM, "m12"); }
const CharTable& m12_2_table() { return load_checked(M12_2_TABLE_TEXT, M12_2_CHECKSUM, "m12.2"); }
const CharTable& m24_partial_table() {
    return load_checked(M24_PARTIAL_TABLE_TEXT, M24_PARTIAL_CHECKSUM, "m24partial");
}

}  // namespace moonshine
