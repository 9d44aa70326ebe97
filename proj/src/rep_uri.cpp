#include "cplan/representations.hpp"

#include "cplan/ffp.hpp"
#include "cplan/instance_io.hpp"

#include <map>

namespace cplan {

namespace {

struct Uri {
    std::string family;
    std::map<std::string, std::string> params;

    const std::string &need(const std::string &key) const {
        auto it = params.find(key);
        if (it == params.end())
            throw InputError("representation " + family + " needs parameter " + key);
        return it->second;
    }
    unsigned need_unsigned(const std::string &key) const {
        const auto v = parse_bigint(need(key));
        if (v > 1000000)
            throw InputError("parameter " + key + " too large");
        return static_cast<unsigned>(v);
    }
    void only(std::initializer_list<const char *> keys) const {
        for (const auto &[k, v] : params) {
            bool known = false;
            for (const char *allowed : keys)
                known = known || k == allowed;
            if (!known)
                throw InputError("representation " + family + " has no parameter " + k);
        }
    }
};

Uri parse_builtin(const std::string &body) {
    Uri uri;
    const auto q = body.find('?');
    uri.family = body.substr(0, q);
    if (q == std::string::npos)
        return uri;
    std::string rest = body.substr(q + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
        auto amp = rest.find('&', start);
        if (amp == std::string::npos)
            amp = rest.size();
        const std::string pair = rest.substr(start, amp - start);
        const auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InputError("malformed parameter '" + pair + "'");
        if (!uri.params.emplace(pair.substr(0, eq), pair.substr(eq + 1)).second)
            throw InputError("repeated parameter " + pair.substr(0, eq));
        start = amp + 1;
    }
    return uri;
}

}  // namespace

RepHandle load_representation(const std::string &uri) {
    RepHandle h;
    if (uri.rfind("file:", 0) == 0) {
        const auto g = parse_grammar(read_text_file(uri.substr(5)));
        auto rep = macro_crar(g);
        h.random_access = rep;
        h.open_stream = [g] { return SequentialPtr(macro_stream(g)); };
        return h;
    }
    if (uri.rfind("builtin:", 0) != 0)
        throw InputError("representation URI must start with builtin: or file:");
    const Uri u = parse_builtin(uri.substr(8));

    if (u.family == "counter-crar") {
        u.only({"n"});
        h.random_access = counter_crar(u.need_unsigned("n"));
    } else if (u.family == "counter-macro") {
        u.only({"n"});
        h.random_access = macro_crar(counter_macro(u.need_unsigned("n")));
    } else if (u.family == "c16-csar" || u.family == "c16-crar") {
        u.only({"n", "i"});
        const unsigned n = u.need_unsigned("n");
        const BigInt i = parse_bigint(u.need("i"));
        const auto adv = compute_advice(n, i);
        if (u.family == "c16-crar")
            h.random_access = c16_crar(n, i, adv);
        else
            h.open_stream = [n, i, adv] { return c16_csar(n, i, adv); };
    } else if (u.family == "c26-csar") {
        u.only({"n"});
        const unsigned n = u.need_unsigned("n");
        h.open_stream = [n] { return c26_csar(n); };
    } else if (u.family == "reversible") {
        u.only({"file", "k"});
        const auto k = u.params.count("k") ? parse_bigint(u.need("k")) : BigInt(1);
        if (k < 1 || k > 1000000)
            throw InputError("k must be in [1, 1000000]");
        auto p = std::make_shared<const FfpInstance>(strips_to_ffp(read_instance_file(u.need("file"))));
        const auto kk = static_cast<std::uint64_t>(k);
        h.open_stream = [p, kk] { return reversible_csar(p, kk); };
    } else {
        throw InputError("unknown representation family '" + u.family + "'");
    }
    if (h.random_access && !h.open_stream) {
        auto ra = h.random_access;
        h.open_stream = [ra] { return crar_to_csar(ra); };
    }
    return h;
}

}  // namespace cplan
