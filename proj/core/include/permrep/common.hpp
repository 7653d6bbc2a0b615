#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace permrep {

// All precondition violations and computational failures throw this.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {
inline void format_into(std::ostringstream&) {}
template <class T, class... Rest>
void format_into(std::ostringstream& os, const T& v, const Rest&... rest)
{
    os << v;
    format_into(os, rest...);
}
}  // namespace detail

template <class... Args>
std::string cat(const Args&... args)
{
    std::ostringstream os;
    detail::format_into(os, args...);
    return os.str();
}

template <class... Args>
[[noreturn]] void fail(const Args&... args)
{
    throw Error(cat(args...));
}

template <class... Args>
void require(bool cond, const Args&... args)
{
    if (!cond)
        fail(args...);
}

// ADL trampoline so that generic code can test scalars for zero from inside
// classes whose own is_zero() member would shadow the free overloads.
template <class T>
bool pr_is_zero(const T& v)
{
    return is_zero(v);
}

}  // namespace permrep
