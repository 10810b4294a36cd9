from cregro.main import Cli

console = Cli()
console.run()
