#include "liegeo/rational.hpp"

namespace liegeo {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw Error("rational", "empty literal");
    size_t slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto valid = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!valid(num) || !valid(den)) throw Error("rational", "bad literal '" + s + "'");
    Rat q;
    if (q.set_str(num + "/" + den, 10) != 0) throw Error("rational", "bad literal '" + s + "'");
    if (q.get_den() == 0) throw Error("rational", "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

}  // namespace liegeo
