#include "wm/report.hpp"

#include <fstream>

#include "wm/errors.hpp"

namespace wm {

Rat parse_rat(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rat q(Int(text), 1);
            q.canonicalize();
            return q;
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw format_error("zero denominator: " + text);
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw format_error("bad rational: " + text);
    }
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

uint64_t fnv1a64(const void* data, size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    uint64_t h = 0xcbf29ce484222325ull;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string file_digest(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw format_error("cannot open: " + path);
    std::string bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    char buf[20];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a64(bytes.data(), bytes.size()));
    return buf;
}

}  // namespace wm
