#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wm/errors.hpp"
#include "wm/integer_set.hpp"

namespace wm {

namespace {
constexpr char kMagic[4] = {'W', 'M', 'S', '1'};
}

void write_set_text(std::ostream& os, const IntegerSet& a) {
    os << "horizon " << a.horizon() << "\n";
    for (uint64_t n : a.members()) os << n << "\n";
}

IntegerSet read_set_text(std::istream& is) {
    std::string line;
    uint64_t lineno = 0;
    uint64_t horizon = 0;
    bool have_horizon = false;
    IntegerSet out;
    uint64_t prev = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        if (!have_horizon) {
            std::string kw;
            ls >> kw >> horizon;
            if (ls.fail() || kw != "horizon" || horizon == 0)
                throw format_error("line " + std::to_string(lineno) +
                                   ": expected 'horizon <N>'");
            out = IntegerSet(horizon);
            have_horizon = true;
            continue;
        }
        uint64_t n = 0;
        ls >> n;
        if (ls.fail())
            throw format_error("line " + std::to_string(lineno) + ": expected a member integer");
        if (n < 1 || n > horizon)
            throw format_error("line " + std::to_string(lineno) + ": member outside [1, horizon]");
        if (n <= prev)
            throw format_error("line " + std::to_string(lineno) + ": members must be ascending");
        out.insert(n);
        prev = n;
    }
    if (!have_horizon) throw format_error("missing 'horizon <N>' line");
    return out;
}

void write_set_binary(std::ostream& os, const IntegerSet& a) {
    os.write(kMagic, 4);
    uint64_t n = a.horizon();
    unsigned char hdr[8];
    for (int i = 0; i < 8; ++i) hdr[i] = (n >> (8 * i)) & 0xff;
    os.write(reinterpret_cast<char*>(hdr), 8);
    uint64_t nbytes = (n + 7) / 8;
    const auto& words = a.bits().words();
    for (uint64_t b = 0; b < nbytes; ++b) {
        unsigned char byte = (words[b / 8] >> (8 * (b % 8))) & 0xff;
        os.put(char(byte));
    }
}

IntegerSet read_set_binary(std::istream& is) {
    char magic[4];
    if (!is.read(magic, 4) || std::string(magic, 4) != std::string(kMagic, 4))
        throw format_error("bad magic: not a WMS1 set file");
    unsigned char hdr[8];
    if (!is.read(reinterpret_cast<char*>(hdr), 8)) throw format_error("truncated header");
    uint64_t n = 0;
    for (int i = 0; i < 8; ++i) n |= uint64_t(hdr[i]) << (8 * i);
    if (n == 0) throw format_error("horizon must be positive");
    IntegerSet out(n);
    uint64_t nbytes = (n + 7) / 8;
    auto& words = out.bits().words();
    for (uint64_t b = 0; b < nbytes; ++b) {
        int c = is.get();
        if (c == EOF) throw format_error("truncated payload");
        words[b / 8] |= uint64_t(uint8_t(c)) << (8 * (b % 8));
    }
    // bits past the horizon must be zero
    uint64_t rem = n & 63;
    if (rem && (words.back() >> rem) != 0) throw format_error("padding bits set past horizon");
    return out;
}

void save_set(const std::string& path, const IntegerSet& a, bool binary) {
    std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
    if (!os) throw format_error("cannot open for writing: " + path);
    if (binary)
        write_set_binary(os, a);
    else
        write_set_text(os, a);
    if (!os) throw format_error("write failed: " + path);
}

IntegerSet load_set(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw format_error("cannot open: " + path);
    char magic[4] = {0, 0, 0, 0};
    is.read(magic, 4);
    is.clear();
    is.seekg(0);
    if (std::string(magic, 4) == std::string(kMagic, 4)) return read_set_binary(is);
    return read_set_text(is);
}

}  // namespace wm
