#include "coverdepth/errors.hpp"

namespace coverdepth {

void throw_input(const std::string& what) { throw InputError(what); }
void throw_precondition(const std::string& what) { throw PreconditionError(what); }
void throw_resource(const std::string& what) { throw ResourceError(what); }

}  // namespace coverdepth
