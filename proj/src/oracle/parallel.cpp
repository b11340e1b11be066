#include "cohfun/parallel.hpp"

namespace cohfun {

namespace {

std::optional<std::string> guarded(const std::function<std::optional<std::string>(std::size_t)>& body, std::size_t i) {
    try {
        return body(i);
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    } catch (...) {
        return std::string("unknown exception");
    }
}

}  // namespace

std::vector<CaseFailure> run_cases(std::size_t n, Execution mode,
                                   const std::function<std::optional<std::string>(std::size_t)>& body) {
    std::vector<std::optional<std::string>> results(n);
    if (mode == Execution::Serial) {
        for (std::size_t i = 0; i < n; ++i) results[i] = guarded(body, i);
    } else {
        const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) results[i] = guarded(body, static_cast<std::size_t>(i));
    }
    std::vector<CaseFailure> failures;
    for (std::size_t i = 0; i < n; ++i)
        if (results[i]) failures.push_back({i, std::move(*results[i])});
    return failures;
}

}  // namespace cohfun
